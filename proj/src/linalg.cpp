#include "tribo/linalg.hpp"

#include <utility>

namespace tribo {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
    }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Rows of `a` (optionally augmented by columns of `rhs`) scaled by the lcm of
// their denominators. Returns the product of the scale factors.
BigInt integerize(const RationalMatrix& a, const RationalMatrix* rhs, IntMatrix& out) {
  const std::size_t n = a.rows();
  const std::size_t extra = rhs ? rhs->cols() : 0;
  out.assign(n, std::vector<BigInt>(a.cols() + extra));
  BigInt scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < extra; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).numerator() * (l / a(i, j).denominator());
    for (std::size_t j = 0; j < extra; ++j) out[i][a.cols() + j] = (*rhs)(i, j).numerator() * (l / (*rhs)(i, j).denominator());
    scale_product *= l;
  }
  return scale_product;
}

// In-place Bareiss elimination over the first n columns. Pivot is the first
// nonzero entry at or below the diagonal. Returns the sign from row swaps, or
// 0 if a column has no pivot (singular).
int bareiss(IntMatrix& m, std::size_t n) {
  int sign = 1;
  BigInt prev = 1;
  const std::size_t width = m.empty() ? 0 : m[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        BigInt v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

void require_square(const RationalMatrix& a, const char* what) {
  if (!a.square()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

RationalMatrix solve_many(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  IntMatrix m;
  integerize(a, &b, m);
  if (bareiss(m, n) == 0) throw SingularSystem("solve_exact: singular system");
  RationalMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(m[ii][n + c]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x(j, c);
      x(ii, c) = acc / Rational(m[ii][ii]);
    }
  }
  return x;
}

}  // namespace

Rational det_exact(const RationalMatrix& a) {
  require_square(a, "det_exact");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m;
  const BigInt scale = integerize(a, nullptr, m);
  const int sign = bareiss(m, n);
  if (sign == 0) return 0;
  return Rational(sign * m[n - 1][n - 1], scale);
}

RationalVector solve_exact(const RationalMatrix& a, const RationalVector& b) {
  require_square(a, "solve_exact");
  if (b.size() != a.rows()) throw std::invalid_argument("solve_exact: rhs length mismatch");
  RationalMatrix col(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) col(i, 0) = b[i];
  const RationalMatrix x = solve_many(a, col);
  RationalVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = x(i, 0);
  return out;
}

RationalMatrix inverse_exact(const RationalMatrix& a) {
  require_square(a, "inverse_exact");
  return solve_many(a, RationalMatrix::identity(a.rows()));
}

}  // namespace tribo
