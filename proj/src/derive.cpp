#include "tribo/derive.hpp"

#include <utility>

namespace tribo {

namespace {

const SequenceSpec& basis_spec(Basis b) {
  static const SequenceSpec t = SequenceSpec::tribonacci();
  static const SequenceSpec k = SequenceSpec::lucas();
  return b == Basis::Tribonacci ? t : k;
}

}  // namespace

FormulaTemplate derive(Basis basis, Index o1, Index o2, Index o3) {
  const std::array<Index, 3> off{o1, o2, o3};
  if (o1 == o2 || o1 == o3 || o2 == o3) {
    throw std::invalid_argument("derive: offsets must be pairwise distinct");
  }
  const SequenceSpec& seq = basis_spec(basis);
  // Basis functions B(s - o_j - lag); the anchors s = o_i give
  // W(r+o_i) = sum_j f_j B(o_i - o_j - lag).
  const Index lag = basis == Basis::Tribonacci ? 0 : 1;
  const Index base_shift = basis == Basis::Tribonacci ? -1 : -2;

  RationalMatrix anchors(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) anchors(i, j) = Rational(term(seq, off[i] - off[j] - lag));

  RationalMatrix inv;
  try {
    inv = inverse_exact(anchors);
  } catch (const SingularSystem&) {
    throw DegenerateOffsets("derive: anchor system is singular for offsets (" + std::to_string(o1) + ", " +
                            std::to_string(o2) + ", " + std::to_string(o3) + ")");
  }

  // f_j = sum_i inv[j][i] W(r+o_i). Rewrite each B(s - o_j - lag) in the
  // canonical basis B(s+base_shift+m) using the seed decomposition.
  std::array<std::array<Rational, 3>, 3> table{};
  for (std::size_t j = 0; j < 3; ++j) {
    const BasisTriple d = basis_decomposition(-off[j] - lag - base_shift);
    const std::array<Rational, 3> coords{Rational(d.a), Rational(d.b), Rational(d.c)};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t m = 0; m < 3; ++m) table[i][m] += inv(j, i) * coords[m];
  }

  BigInt lcm = 1;
  for (const auto& row : table)
    for (const auto& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.denominator().get_mpz_t());

  FormulaTemplate t;
  t.basis = basis;
  t.offsets = off;
  t.base_shift = base_shift;
  BigInt g = lcm;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t m = 0; m < 3; ++m) {
      t.coeffs[i][m] = table[i][m].numerator() * (lcm / table[i][m].denominator());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeffs[i][m].get_mpz_t());
    }
  for (auto& row : t.coeffs)
    for (auto& c : row) c /= g;
  t.denominator = lcm / g;
  return t;
}

FormulaTemplate derive_tribonacci_basis(Index o1, Index o2, Index o3) {
  return derive(Basis::Tribonacci, o1, o2, o3);
}

FormulaTemplate derive_lucas_basis(Index o1, Index o2, Index o3) {
  return derive(Basis::Lucas, o1, o2, o3);
}

Identity FormulaTemplate::to_identity() const {
  Identity id;
  id.lhs.push_back(Term{denominator, {Factor{Symbol::W, IndexExpr{1, 1, 0}, 1}}});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t m = 0; m < 3; ++m) {
      if (coeffs[i][m] == 0) continue;
      id.rhs.push_back(Term{coeffs[i][m],
                            {Factor{basis_symbol(), IndexExpr{0, 1, base_shift + static_cast<Index>(m)}, 1},
                             Factor{Symbol::W, IndexExpr{1, 0, offsets[i]}, 1}}});
    }
  return id;
}

std::string FormulaTemplate::text() const {
  Identity lhs_only;
  lhs_only.lhs.push_back(Term{denominator, {Factor{Symbol::W, IndexExpr{1, 1, 0}, 1}}});
  std::string out = render_sum(lhs_only.lhs) + " = ";
  bool first = true;
  for (std::size_t i = 0; i < 3; ++i) {
    Sum group;
    for (std::size_t m = 0; m < 3; ++m) {
      if (coeffs[i][m] == 0) continue;
      group.push_back(Term{coeffs[i][m], {Factor{basis_symbol(), IndexExpr{0, 1, base_shift + static_cast<Index>(m)}, 1}}});
    }
    if (group.empty()) continue;
    const std::string w = "W(" + render_index(IndexExpr{1, 0, offsets[i]}) + ")";
    std::string piece;
    bool neg = false;
    if (group.size() == 1) {
      neg = group[0].coeff < 0;
      group[0].coeff = abs(group[0].coeff);
      piece = render_sum(group) + "*" + w;
    } else {
      piece = "(" + render_sum(group) + ")*" + w;
    }
    if (first) out += neg ? "-" + piece : piece;
    else out += (neg ? " - " : " + ") + piece;
    first = false;
  }
  if (first) out += "0";
  return out;
}

Identity swap_variables(const Identity& id) {
  auto swap_sum = [](Sum s) {
    for (auto& t : s)
      for (auto& f : t.factors) std::swap(f.index.r_coeff, f.index.s_coeff);
    return s;
  };
  return Identity{swap_sum(id.lhs), swap_sum(id.rhs)};
}

Identity swap_roles(const FormulaTemplate& t) { return swap_variables(t.to_identity()); }

BigInt evaluate_template(const FormulaTemplate& t, const SeedVector& seed, Index r, Index s) {
  const SequenceSpec w = SequenceSpec::generalized(seed);
  const SequenceSpec& b = basis_spec(t.basis);
  const auto basis_vals = term_range(b, s + t.base_shift, s + t.base_shift + 2);
  BigInt rhs = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    BigInt coeff = 0;
    for (std::size_t m = 0; m < 3; ++m) coeff += t.coeffs[i][m] * basis_vals[m];
    rhs += coeff * term(w, r + t.offsets[i]);
  }
  return rhs - t.denominator * term(w, r + s);
}

}  // namespace tribo
