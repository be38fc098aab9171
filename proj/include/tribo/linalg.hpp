#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tribo/bigint.hpp"

namespace tribo {

/// Exact rational number. Always canonical: denominator > 0, reduced, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  std::string str() const { return q_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of rationals. Sized for derivation systems (n <= 9).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws std::invalid_argument on ragged input.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalVector operator*(const RationalVector& v) const;
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument if `a` is not square.
Rational det_exact(const RationalMatrix& a);

/// Exact x with a*x = b. Throws SingularSystem when det(a) = 0 and
/// std::invalid_argument on shape mismatch.
RationalVector solve_exact(const RationalMatrix& a, const RationalVector& b);

/// Exact inverse. Throws SingularSystem when det(a) = 0.
RationalMatrix inverse_exact(const RationalMatrix& a);

}  // namespace tribo
