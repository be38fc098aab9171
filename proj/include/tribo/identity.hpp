#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tribo/bigint.hpp"

namespace tribo {

enum class Symbol { K, T, W };

char symbol_char(Symbol s);

enum class Var { R, S };

char var_char(Var v);

/// Linear subscript r_coeff*r + s_coeff*s + offset.
struct IndexExpr {
  int r_coeff = 0;
  int s_coeff = 0;
  Index offset = 0;

  bool absolute() const { return r_coeff == 0 && s_coeff == 0; }
  int coeff(Var v) const { return v == Var::R ? r_coeff : s_coeff; }
  Index at(Index r, Index s) const { return r_coeff * r + s_coeff * s + offset; }
  auto operator<=>(const IndexExpr&) const = default;
};

struct Factor {
  Symbol symbol = Symbol::W;
  IndexExpr index;
  unsigned exponent = 1;

  auto operator<=>(const Factor&) const = default;
};

/// Integer coefficient times a product of factors. No factors means a constant.
struct Term {
  BigInt coeff;
  std::vector<Factor> factors;
};

using Sum = std::vector<Term>;

/// lhs = rhs, each side a sum of terms.
struct Identity {
  Sum lhs;
  Sum rhs;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Parses `lhs = rhs`. Parenthesized sums are distributed, so the result is a
/// flat sum of monomials on each side (not yet canonical).
Identity parse(std::string_view text);

/// Sorts and merges factors, merges like terms, cancels monomials that appear
/// on both sides (the net lands on the lhs) and drops zero terms. Terms keep
/// the order of first appearance.
Identity canonicalize(const Identity& id);

/// Order-insensitive equality of canonical forms.
bool canonically_equal(const Identity& a, const Identity& b);

/// lhs - rhs as one canonical sum.
Sum residual(const Identity& id);

/// Deterministic canonical text; zero sides render as "0".
std::string render(const Identity& id);
std::string render_sum(const Sum& sum);
std::string render_index(const IndexExpr& idx);

struct VarProfile {
  std::set<unsigned> degrees;
  std::optional<Index> min_offset;
  std::optional<Index> max_offset;
};

struct DegreeProfile {
  std::map<Var, VarProfile> vars;  ///< only variables that occur
  unsigned w_degree = 0;           ///< max total W exponent in a monomial
};

DegreeProfile degree_profile(const Identity& id);

}  // namespace tribo
