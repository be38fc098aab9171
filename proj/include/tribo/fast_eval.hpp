#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tribo/sequence.hpp"

namespace tribo {

/// Counts big-integer multiplications performed by fast_term.
struct MulCounter {
  std::uint64_t count = 0;
};

/// (T_{n-1}, T_n, T_{n+1}) for a tracked index n.
struct Triple {
  BigInt prev;
  BigInt curr;
  BigInt next;

  bool operator==(const Triple&) const = default;
};

/// The Tribonacci window at n by binary doubling. Each doubling step costs
/// exactly kMulsPerDoubling multiplications; unit steps cost none.
Triple tribonacci_triple(Index n, MulCounter* counter = nullptr);

inline constexpr std::uint64_t kMulsPerDoubling = 9;

/// W_n in O(log |n|) multiplications. General seeds are combined as
/// w0*T_{n-2} + w1*(T_{n-2} + T_{n-3}) + w2*T_{n-1} (three more products).
BigInt fast_term(const SequenceSpec& spec, Index n, MulCounter* counter = nullptr);

/// W_n from powers of the companion matrix (or its integer inverse for n < 0).
BigInt matrix_power_term(const SequenceSpec& spec, Index n);

enum class Strategy { Iterate, Double, Matrix };

std::string strategy_name(Strategy s);
/// Throws std::invalid_argument on an unknown name.
Strategy parse_strategy(const std::string& name);

struct BenchRow {
  Index n = 0;
  Strategy strategy = Strategy::Iterate;
  std::uint64_t nanoseconds = 0;
  std::size_t digits = 0;
  BigInt value;
};

class VerificationMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Times every (n, strategy) pair sequentially. All strategies at an n must
/// agree before any timing is reported, else VerificationMismatch.
/// Throws std::invalid_argument if ns or strategies is empty.
std::vector<BenchRow> bench(const SequenceSpec& spec, const std::vector<Index>& ns,
                            const std::vector<Strategy>& strategies);

/// "n,strategy,nanoseconds,digits" header plus one line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Decimal digits of |v| (1 for zero).
std::size_t decimal_digits(const BigInt& v);

}  // namespace tribo
