#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tribo/identity.hpp"
#include "tribo/sequence.hpp"

namespace tribo {

// Soundness of certify().
//
// Every solution of W_n = W_{n-1} + W_{n-2} + W_{n-3} is a combination of
// a^n, b^n, c^n for the distinct roots of x^3 - x^2 - x - 1, whose product
// is 1. Fix all index variables but one, say v. A monomial with d factors
// whose subscripts contain v (coefficient 1) is then a product of d solutions
// in v, which lies in the span of the C(d+2, 2) exponentials
// a^{iv} b^{jv} c^{kv} with i+j+k = d. That span is invariant under the shift
// v -> v+1 and the shift is invertible on it (no root is zero), so a function
// in it obeys a linear recurrence of order at most its dimension with nonzero
// constant term. A function obeying such a recurrence that vanishes on that
// many consecutive integers vanishes everywhere. Monomials of different
// v-degrees live in the sum of the spans, of dimension at most the sum.
//
// Vanishing on a window in r for every s of a window in s, and vice versa,
// extends to all (r, s) one variable at a time. The residual is a polynomial
// in (w0, w1, w2) of degree at most d_W in each seed, so vanishing on the grid
// {0..d_W}^3 makes it the zero polynomial.

enum class Verdict { Verified, Refuted, Unsupported };

std::string verdict_name(Verdict v);

struct Counterexample {
  SeedVector seed;
  Index r = 0;
  Index s = 0;
  BigInt lhs;
  BigInt rhs;
};

struct VarWindow {
  std::set<unsigned> degrees;
  std::uint64_t size = 0;  ///< sum of C(d+2, 2) over degrees
  Index base = 0;
};

struct Certificate {
  std::string identity;  ///< canonical rendering of what was checked
  std::map<Var, VarWindow> windows;
  unsigned w_degree = 0;
  unsigned seed_grid_max = 0;  ///< grid is {0..seed_grid_max}^3
  Verdict verdict = Verdict::Unsupported;
  std::string unsupported_reason;
  std::optional<Counterexample> counterexample;
  std::uint64_t evaluations = 0;
};

/// C(d+2, 2): dimension of degree-d products of order-3 recurrence solutions.
std::uint64_t window_bound(unsigned d);

/// Proves or refutes `id` for all integers r, s and all integer seeds.
Certificate certify(const Identity& id);

/// Both sides of `id` evaluated exactly. Absolute subscripts, constants and
/// any subscript coefficients are allowed here.
std::pair<BigInt, BigInt> evaluate(const Identity& id, const SeedVector& seed, Index r, Index s);

struct FuzzReport {
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  std::optional<Counterexample> failure;
};

/// Random seeds in [-1000, 1000]^3 and r, s in [-60, 60]; stops at the first
/// failure. Deterministic for a given rng_seed.
FuzzReport fuzz(const Identity& id, std::uint64_t trials, std::uint64_t rng_seed);

/// Every identity obtained by adding 1 to a single coefficient of the
/// canonical form (both sides).
std::vector<Identity> single_coefficient_mutants(const Identity& id);

}  // namespace tribo
