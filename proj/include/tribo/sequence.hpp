#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tribo/bigint.hpp"

namespace tribo {

/// Initial values (W_0, W_1, W_2). All-zero seeds are allowed.
struct SeedVector {
  BigInt w0;
  BigInt w1;
  BigInt w2;

  bool operator==(const SeedVector&) const = default;
};

/// Which order-3 sequence is being evaluated.
class SequenceSpec {
 public:
  enum class Kind { Tribonacci, TribonacciLucas, Generalized };

  static SequenceSpec tribonacci() { return SequenceSpec(Kind::Tribonacci, {0, 1, 1}); }
  static SequenceSpec lucas() { return SequenceSpec(Kind::TribonacciLucas, {3, 1, 3}); }
  static SequenceSpec generalized(SeedVector seeds) {
    return SequenceSpec(Kind::Generalized, std::move(seeds));
  }

  Kind kind() const { return kind_; }
  /// Seeds for every kind; T and K report their fixed seeds.
  const SeedVector& seeds() const { return seeds_; }
  std::string name() const;

 private:
  SequenceSpec(Kind kind, SeedVector seeds) : kind_(kind), seeds_(std::move(seeds)) {}

  Kind kind_;
  SeedVector seeds_;
};

class RangeOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// W_n. Forward recurrence for n >= 3, backward extension
/// W_n = 2 W_{n+3} - W_{n+4} for n < 0.
BigInt term(const SequenceSpec& spec, Index n);

/// [W_lo, ..., W_hi] in one linear pass. Throws RangeOrderError if lo > hi.
std::vector<BigInt> term_range(const SequenceSpec& spec, Index lo, Index hi);

/// Coordinates of W_n in the seeds: W_n = a*w0 + b*w1 + c*w2 for every seed.
struct BasisTriple {
  BigInt a;
  BigInt b;
  BigInt c;

  bool operator==(const BasisTriple&) const = default;
};

BasisTriple basis_decomposition(Index n);

}  // namespace tribo
