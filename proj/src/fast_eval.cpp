#include "tribo/fast_eval.hpp"

#include <array>
#include <chrono>
#include <sstream>

namespace tribo {

namespace {

BigInt mul(const BigInt& a, const BigInt& b, MulCounter* counter) {
  if (counter) ++counter->count;
  return a * b;
}

// Window at m -> window at 2m. With p = T_{m-1}, c = T_m, x = T_{m+1} and
// q = T_{m-2}, the addition formula T_{a+b} = T_{b-1}T_{a-1} +
// (T_{b-1} + T_{b-2})T_a + T_b T_{a+1} at (a, b) = (m-1, m), (m, m), (m+1, m):
//   T_{2m-1} = p q + (p + q) p + c^2
//   T_{2m}   = p^2 + (p + q) c + c x
//   T_{2m+1} = p c + (p + q) x + c (x + c + p)
Triple double_step(const Triple& w, MulCounter* counter) {
  const BigInt& p = w.prev;
  const BigInt& c = w.curr;
  const BigInt& x = w.next;
  const BigInt q = x - c - p;
  const BigInt pq = p + q;
  Triple out;
  out.prev = mul(p, q, counter) + mul(pq, p, counter) + mul(c, c, counter);
  out.curr = mul(p, p, counter) + mul(pq, c, counter) + mul(c, x, counter);
  out.next = mul(p, c, counter) + mul(pq, x, counter) + mul(c, BigInt(x + c + p), counter);
  return out;
}

void step_forward(Triple& w) {
  BigInt n = w.prev + w.curr + w.next;
  w.prev = std::move(w.curr);
  w.curr = std::move(w.next);
  w.next = std::move(n);
}

void step_backward(Triple& w) {
  BigInt p = w.next - w.curr - w.prev;
  w.next = std::move(w.curr);
  w.curr = std::move(w.prev);
  w.prev = std::move(p);
}

using Mat3 = std::array<std::array<BigInt, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = std::move(acc);
    }
  return out;
}

}  // namespace

Triple tribonacci_triple(Index n, MulCounter* counter) {
  // Bits of |n| from the top; each bit doubles the tracked index, then moves
  // it one step toward the sign of n.
  Triple w{0, 0, 1};  // index 0
  const std::uint64_t mag = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  int top = 63;
  while (top >= 0 && ((mag >> top) & 1U) == 0) --top;
  for (int b = top; b >= 0; --b) {
    w = double_step(w, counter);
    if ((mag >> b) & 1U) {
      if (n < 0) step_backward(w);
      else step_forward(w);
    }
  }
  return w;
}

BigInt fast_term(const SequenceSpec& spec, Index n, MulCounter* counter) {
  if (spec.kind() == SequenceSpec::Kind::Tribonacci) return tribonacci_triple(n, counter).curr;
  // (T_{n-3}, T_{n-2}, T_{n-1})
  const Triple t = tribonacci_triple(n - 2, counter);
  const SeedVector& s = spec.seeds();
  return mul(s.w0, t.curr, counter) + mul(s.w1, BigInt(t.curr + t.prev), counter) + mul(s.w2, t.next, counter);
}

BigInt matrix_power_term(const SequenceSpec& spec, Index n) {
  // (W_{k+2}, W_{k+1}, W_k) -> (W_{k+3}, W_{k+2}, W_{k+1})
  const Mat3 forward{{{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}};
  // W_{k-1} = W_{k+2} - W_{k+1} - W_k
  const Mat3 backward{{{0, 1, 0}, {0, 0, 1}, {1, -1, -1}}};
  Mat3 base = n < 0 ? backward : forward;
  std::uint64_t e = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  Mat3 acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  while (e) {
    if (e & 1U) acc = mat_mul(acc, base);
    e >>= 1U;
    if (e) base = mat_mul(base, base);
  }
  const SeedVector& s = spec.seeds();
  return acc[2][0] * s.w2 + acc[2][1] * s.w1 + acc[2][2] * s.w0;
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Iterate: return "iterate";
    case Strategy::Double: return "double";
    case Strategy::Matrix: return "matrix";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "iterate") return Strategy::Iterate;
  if (name == "double") return Strategy::Double;
  if (name == "matrix") return Strategy::Matrix;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected iterate, double or matrix)");
}

std::size_t decimal_digits(const BigInt& v) {
  if (v == 0) return 1;
  return BigInt(abs(v)).get_str().size();
}

std::vector<BenchRow> bench(const SequenceSpec& spec, const std::vector<Index>& ns,
                            const std::vector<Strategy>& strategies) {
  if (ns.empty()) throw std::invalid_argument("bench: no indices given");
  if (strategies.empty()) throw std::invalid_argument("bench: no strategies given");
  std::vector<BenchRow> rows;
  for (const Index n : ns) {
    std::vector<BenchRow> batch;
    for (const Strategy s : strategies) {
      BenchRow row;
      row.n = n;
      row.strategy = s;
      const auto t0 = std::chrono::steady_clock::now();
      switch (s) {
        case Strategy::Iterate: row.value = term(spec, n); break;
        case Strategy::Double: row.value = fast_term(spec, n); break;
        case Strategy::Matrix: row.value = matrix_power_term(spec, n); break;
      }
      const auto t1 = std::chrono::steady_clock::now();
      row.nanoseconds = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
      row.digits = decimal_digits(row.value);
      batch.push_back(std::move(row));
    }
    for (const auto& row : batch)
      if (row.value != batch.front().value)
        throw VerificationMismatch("bench: strategies " + strategy_name(batch.front().strategy) + " and " +
                                   strategy_name(row.strategy) + " disagree at n = " + std::to_string(n));
    rows.insert(rows.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,strategy,nanoseconds,digits\n";
  for (const auto& r : rows)
    out << r.n << ',' << strategy_name(r.strategy) << ',' << r.nanoseconds << ',' << r.digits << '\n';
  return out.str();
}

}  // namespace tribo
