#include "tribo/certify.hpp"

#include <random>
#include <unordered_map>

namespace tribo {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

std::uint64_t window_bound(unsigned d) {
  const std::uint64_t n = d;
  return (n + 2) * (n + 1) / 2;
}

namespace {

class TermCache {
 public:
  explicit TermCache(SequenceSpec spec) : spec_(std::move(spec)) {}

  const BigInt& at(Index n) {
    auto it = memo_.find(n);
    if (it == memo_.end()) it = memo_.emplace(n, term(spec_, n)).first;
    return it->second;
  }

 private:
  SequenceSpec spec_;
  std::unordered_map<Index, BigInt> memo_;
};

struct Evaluator {
  TermCache w;
  TermCache& t;
  TermCache& k;

  BigInt sum(const Sum& side, Index r, Index s) {
    BigInt total = 0;
    BigInt prod;
    BigInt power;
    for (const auto& term : side) {
      prod = term.coeff;
      for (const auto& f : term.factors) {
        TermCache& c = f.symbol == Symbol::W ? w : (f.symbol == Symbol::T ? t : k);
        mpz_pow_ui(power.get_mpz_t(), c.at(f.index.at(r, s)).get_mpz_t(), f.exponent);
        prod *= power;
      }
      total += prod;
    }
    return total;
  }
};

TermCache& shared_t() {
  thread_local TermCache cache(SequenceSpec::tribonacci());
  return cache;
}

TermCache& shared_k() {
  thread_local TermCache cache(SequenceSpec::lucas());
  return cache;
}

std::optional<std::string> unsupported(const Sum& residual) {
  for (const auto& t : residual) {
    if (t.factors.empty()) return "constant term " + t.coeff.get_str();
    for (const auto& f : t.factors) {
      const std::string where = std::string(1, symbol_char(f.symbol)) + "(" + render_index(f.index) + ")";
      if (f.index.absolute()) return "absolute subscript " + where;
      if (f.index.r_coeff < 0 || f.index.r_coeff > 1 || f.index.s_coeff < 0 || f.index.s_coeff > 1)
        return "subscript coefficient outside {0, 1} in " + where;
    }
  }
  return std::nullopt;
}

}  // namespace

std::pair<BigInt, BigInt> evaluate(const Identity& id, const SeedVector& seed, Index r, Index s) {
  Evaluator ev{TermCache(SequenceSpec::generalized(seed)), shared_t(), shared_k()};
  return {ev.sum(id.lhs, r, s), ev.sum(id.rhs, r, s)};
}

Certificate certify(const Identity& id) {
  const Identity canon = canonicalize(id);
  Certificate cert;
  cert.identity = render(canon);
  const Sum res = residual(canon);
  if (res.empty()) {
    cert.verdict = Verdict::Verified;
    return cert;
  }
  if (auto why = unsupported(res)) {
    cert.verdict = Verdict::Unsupported;
    cert.unsupported_reason = *why;
    return cert;
  }

  const DegreeProfile profile = degree_profile(canon);
  for (const auto& [v, vp] : profile.vars) {
    VarWindow w;
    w.degrees = vp.degrees;
    for (unsigned d : vp.degrees) w.size += window_bound(d);
    cert.windows.emplace(v, std::move(w));
  }
  cert.w_degree = profile.w_degree;
  cert.seed_grid_max = profile.w_degree;

  auto window_of = [&](Var v) -> std::pair<Index, Index> {
    auto it = cert.windows.find(v);
    if (it == cert.windows.end()) return {0, 1};
    return {it->second.base, it->second.base + static_cast<Index>(it->second.size)};
  };
  const auto [r_lo, r_hi] = window_of(Var::R);
  const auto [s_lo, s_hi] = window_of(Var::S);
  const long g = cert.seed_grid_max;

  // Lexicographic (seed, r, s) order; the first failure is the counterexample.
  for (long a = 0; a <= g; ++a)
    for (long b = 0; b <= g; ++b)
      for (long c = 0; c <= g; ++c) {
        const SeedVector seed{a, b, c};
        Evaluator ev{TermCache(SequenceSpec::generalized(seed)), shared_t(), shared_k()};
        for (Index r = r_lo; r < r_hi; ++r)
          for (Index s = s_lo; s < s_hi; ++s) {
            ++cert.evaluations;
            BigInt lhs = ev.sum(canon.lhs, r, s);
            BigInt rhs = ev.sum(canon.rhs, r, s);
            if (lhs != rhs) {
              cert.verdict = Verdict::Refuted;
              cert.counterexample = Counterexample{seed, r, s, std::move(lhs), std::move(rhs)};
              return cert;
            }
          }
      }
  cert.verdict = Verdict::Verified;
  return cert;
}

FuzzReport fuzz(const Identity& id, std::uint64_t trials, std::uint64_t rng_seed) {
  FuzzReport rep;
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<long> seed_dist(-1000, 1000);
  std::uniform_int_distribution<Index> index_dist(-60, 60);
  for (std::uint64_t i = 0; i < trials; ++i) {
    SeedVector seed;
    seed.w0 = seed_dist(rng);
    seed.w1 = seed_dist(rng);
    seed.w2 = seed_dist(rng);
    const Index r = index_dist(rng);
    const Index s = index_dist(rng);
    ++rep.trials;
    auto [lhs, rhs] = evaluate(id, seed, r, s);
    if (lhs != rhs) {
      rep.failure = Counterexample{std::move(seed), r, s, std::move(lhs), std::move(rhs)};
      return rep;
    }
    ++rep.passes;
  }
  return rep;
}

std::vector<Identity> single_coefficient_mutants(const Identity& id) {
  const Identity canon = canonicalize(id);
  std::vector<Identity> out;
  auto mutate_side = [&](bool lhs) {
    const Sum& side = lhs ? canon.lhs : canon.rhs;
    for (std::size_t i = 0; i < side.size(); ++i) {
      Identity m = canon;
      Sum& target = lhs ? m.lhs : m.rhs;
      target[i].coeff += 1;
      if (target[i].coeff == 0) target.erase(target.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(std::move(m));
    }
  };
  mutate_side(true);
  mutate_side(false);
  return out;
}

}  // namespace tribo
