#include "tribo/sequence.hpp"

#include <utility>

namespace tribo {

std::string SequenceSpec::name() const {
  switch (kind_) {
    case Kind::Tribonacci:
      return "T";
    case Kind::TribonacciLucas:
      return "K";
    case Kind::Generalized:
      return "W(" + seeds_.w0.get_str() + "," + seeds_.w1.get_str() + "," +
             seeds_.w2.get_str() + ")";
  }
  return "?";
}

namespace {

// Three consecutive values (W_n, W_{n+1}, W_{n+2}) starting at `n`.
std::array<BigInt, 3> window_at(const SeedVector& s, Index n) {
  std::array<BigInt, 3> w{s.w0, s.w1, s.w2};
  if (n >= 0) {
    for (Index k = 0; k < n; ++k) {
      BigInt next = w[0] + w[1] + w[2];
      w[0] = std::move(w[1]);
      w[1] = std::move(w[2]);
      w[2] = std::move(next);
    }
    return w;
  }
  // Backward: keep (W_k, W_{k+1}, W_{k+2}, W_{k+3}) so that
  // W_{k-1} = 2 W_{k+2} - W_{k+3}.
  BigInt w3 = w[0] + w[1] + w[2];
  for (Index k = 0; k > n; --k) {
    BigInt prev = 2 * w[2] - w3;
    w3 = std::move(w[2]);
    w[2] = std::move(w[1]);
    w[1] = std::move(w[0]);
    w[0] = std::move(prev);
  }
  return w;
}

}  // namespace

BigInt term(const SequenceSpec& spec, Index n) {
  const SeedVector& s = spec.seeds();
  if (n >= 0 && n <= 2) {
    return n == 0 ? s.w0 : (n == 1 ? s.w1 : s.w2);
  }
  return window_at(s, n)[0];
}

std::vector<BigInt> term_range(const SequenceSpec& spec, Index lo, Index hi) {
  if (lo > hi) {
    throw RangeOrderError("term_range: lo (" + std::to_string(lo) + ") > hi (" +
                          std::to_string(hi) + ")");
  }
  auto w = window_at(spec.seeds(), lo);
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Index k = lo; k <= hi; ++k) {
    out.push_back(w[0]);
    BigInt next = w[0] + w[1] + w[2];
    w[0] = std::move(w[1]);
    w[1] = std::move(w[2]);
    w[2] = std::move(next);
  }
  return out;
}

BasisTriple basis_decomposition(Index n) {
  // W_n = T_{n-2} w0 + (T_{n-2} + T_{n-3}) w1 + T_{n-1} w2
  auto t = window_at(SequenceSpec::tribonacci().seeds(), n - 3);
  return {t[1], t[1] + t[0], t[2]};
}

}  // namespace tribo
