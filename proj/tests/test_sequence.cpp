#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tribo/sequence.hpp"

using namespace tribo;

TEST_CASE("reference table of T and K is reproduced") {
  const auto t = SequenceSpec::tribonacci();
  const auto k = SequenceSpec::lucas();
  for (Index n = oracle::kTableLo; n <= oracle::kTableHi; ++n) {
    const auto i = static_cast<std::size_t>(n - oracle::kTableLo);
    CHECK(term(t, n) == oracle::table_t()[i]);
    CHECK(term(k, n) == oracle::table_k()[i]);
  }
}

TEST_CASE("term examples") {
  CHECK(term(SequenceSpec::tribonacci(), 24) == 755476);
  CHECK(term(SequenceSpec::lucas(), -20) == 795);
  CHECK(term(SequenceSpec::generalized({1, 2, 3}), 5) == 20);
  const auto zero = SequenceSpec::generalized({0, 0, 0});
  for (Index n : {-40, -3, 0, 2, 99}) CHECK(term(zero, n) == 0);
}

TEST_CASE("named sequences equal their generalized seeds") {
  const auto t = SequenceSpec::tribonacci();
  const auto tg = SequenceSpec::generalized({0, 1, 1});
  const auto k = SequenceSpec::lucas();
  const auto kg = SequenceSpec::generalized({3, 1, 3});
  for (Index n = -60; n <= 60; ++n) {
    CHECK(term(t, n) == term(tg, n));
    CHECK(term(k, n) == term(kg, n));
  }
}

TEST_CASE("term matches naive iteration on both sides of zero") {
  const std::array<oracle::Int, 3> seed{7, -2, 11};
  const auto spec = SequenceSpec::generalized({7, -2, 11});
  for (Index n = -70; n <= 70; ++n) CHECK(term(spec, n) == oracle::brute_term(seed, n));
}

TEST_CASE("term_range") {
  using V = std::vector<BigInt>;
  CHECK(term_range(SequenceSpec::tribonacci(), -4, 2) == V{0, -1, 1, 0, 0, 1, 1});
  CHECK(term_range(SequenceSpec::lucas(), 0, 5) == V{3, 1, 3, 7, 11, 21});
  const auto g = SequenceSpec::generalized({4, -9, 2});
  CHECK(term_range(g, 7, 7) == V{term(g, 7)});
  CHECK_THROWS_AS(term_range(g, 3, 2), RangeOrderError);

  const auto vals = term_range(g, -45, 45);
  for (Index n = -45; n <= 45; ++n) CHECK(vals[static_cast<std::size_t>(n + 45)] == term(g, n));
}

TEST_CASE("basis_decomposition") {
  CHECK(basis_decomposition(0) == BasisTriple{1, 0, 0});
  CHECK(basis_decomposition(3) == BasisTriple{1, 1, 1});
  CHECK(basis_decomposition(5) == BasisTriple{2, 3, 4});
  for (Index n = -50; n <= 50; ++n) {
    const BasisTriple want{oracle::brute_term({1, 0, 0}, n), oracle::brute_term({0, 1, 0}, n),
                           oracle::brute_term({0, 0, 1}, n)};
    CHECK(basis_decomposition(n) == want);
  }
}

TEST_CASE("recurrence properties over random seeds") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int trial = 0; trial < 20; ++trial) {
    const SeedVector u{dist(rng), dist(rng), dist(rng)};
    const SeedVector v{dist(rng), dist(rng), dist(rng)};
    const SeedVector uv{u.w0 + v.w0, u.w1 + v.w1, u.w2 + v.w2};
    const auto su = SequenceSpec::generalized(u);
    const auto sv = SequenceSpec::generalized(v);
    const auto suv = SequenceSpec::generalized(uv);
    const auto w = term_range(su, -40, 40);
    for (Index n = -36; n <= 40; ++n) {
      const auto i = static_cast<std::size_t>(n + 40);
      // defining recurrence and the three-term form W_n = 2 W_{n-1} - W_{n-4}
      CHECK(w[i] == w[i - 1] + w[i - 2] + w[i - 3]);
      CHECK(w[i] == 2 * w[i - 1] - w[i - 4]);
      CHECK(term(suv, n) == term(su, n) + term(sv, n));
      const auto d = basis_decomposition(n);
      CHECK(w[i] == u.w0 * d.a + u.w1 * d.b + u.w2 * d.c);
    }
  }
}
