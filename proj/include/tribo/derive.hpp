#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "tribo/identity.hpp"
#include "tribo/linalg.hpp"
#include "tribo/sequence.hpp"

namespace tribo {

enum class Basis { Tribonacci, Lucas };

/// denominator * W(r+s) = sum_i sum_m coeffs[i][m] * B(s+base_shift+m) * W(r+offsets[i])
///
/// B is T for the Tribonacci basis and K for the Lucas basis. base_shift is -1
/// for T (basis T(s-1), T(s), T(s+1)) and -2 for K (basis K(s-2), K(s-1), K(s)).
/// Integer coefficients and denominator share no common factor.
struct FormulaTemplate {
  Basis basis = Basis::Tribonacci;
  std::array<Index, 3> offsets{};
  Index base_shift = -1;
  std::array<std::array<BigInt, 3>, 3> coeffs;
  BigInt denominator = 1;

  Symbol basis_symbol() const { return basis == Basis::Tribonacci ? Symbol::T : Symbol::K; }
  Rational coefficient(std::size_t i, std::size_t m) const { return Rational(coeffs[i][m], denominator); }

  /// Grouped text, e.g. "W(r+s) = T(s-1)*W(r-1) + (-T(s) + T(s+1))*W(r) + T(s)*W(r+1)".
  std::string text() const;
  /// The template as a flat identity over W(r+s), B(s+..) and W(r+..).
  Identity to_identity() const;
};

class DegenerateOffsets : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// W(r+s) through W(r+o1), W(r+o2), W(r+o3) with T coefficients.
/// Throws std::invalid_argument on repeated offsets and DegenerateOffsets when
/// the anchor system is singular.
FormulaTemplate derive_tribonacci_basis(Index o1, Index o2, Index o3);

/// Same with K coefficients. The anchor system uses K(o_i - o_j - 1), whose
/// diagonal is K(-1) = -1.
FormulaTemplate derive_lucas_basis(Index o1, Index o2, Index o3);

FormulaTemplate derive(Basis basis, Index o1, Index o2, Index o3);

/// The template with r and s interchanged: W and basis factors trade subscripts.
Identity swap_roles(const FormulaTemplate& t);

/// Interchanges r and s in every subscript of an identity.
Identity swap_variables(const Identity& id);

/// RHS - denominator * W(r+s) for the given seeds. Zero for a valid template.
BigInt evaluate_template(const FormulaTemplate& t, const SeedVector& seed, Index r, Index s);

}  // namespace tribo
