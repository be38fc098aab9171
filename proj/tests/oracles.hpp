#pragma once
// Test-only reference computations. Nothing here calls into the library's
// evaluation paths.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Int = mpz_class;

/// W_n by naive iteration; negative side uses W_n = W_{n+3} - W_{n+2} - W_{n+1}.
inline Int brute_term(const std::array<Int, 3>& seed, std::int64_t n) {
  std::map<std::int64_t, Int> w{{0, seed[0]}, {1, seed[1]}, {2, seed[2]}};
  for (std::int64_t k = 3; k <= n; ++k) w[k] = w[k - 1] + w[k - 2] + w[k - 3];
  for (std::int64_t k = -1; k >= n; --k) w[k] = w[k + 3] - w[k + 2] - w[k + 1];
  return w.at(n);
}

inline Int brute_t(std::int64_t n) { return brute_term({0, 1, 1}, n); }
inline Int brute_k(std::int64_t n) { return brute_term({3, 1, 3}, n); }

/// Cofactor expansion along the first row.
inline mpq_class cofactor_det(const std::vector<std::vector<mpq_class>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  mpq_class acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpq_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const mpq_class term = m[0][j] * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : mpq_class(-term);
  }
  return acc;
}

/// Cramer's rule for a nonsingular system.
inline std::vector<mpq_class> cramer(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b) {
  const mpq_class d = cofactor_det(a);
  std::vector<mpq_class> x;
  for (std::size_t j = 0; j < a.size(); ++j) {
    auto aj = a;
    for (std::size_t i = 0; i < a.size(); ++i) aj[i][j] = b[i];
    x.push_back(cofactor_det(aj) / d);
  }
  return x;
}

// Printed table of T_r and K_r for r = -20 .. 24.
inline const std::vector<long>& table_t() {
  static const std::vector<long> v{-56,  159,  -103, 0,    56,    -47,    9,      18,     -20,    7,     5,     -8,
                                   4,    1,    -3,   2,    0,     -1,     1,      0,      0,      1,     1,     2,
                                   4,    7,    13,   24,   44,    81,     149,    274,    504,    927,   1705,  3136,
                                   5768, 10609, 19513, 35890, 66012, 121415, 223317, 410744, 755476};
  return v;
}

inline const std::vector<long>& table_k() {
  static const std::vector<long> v{795,   -571,  47,    271,   -253,   65,     83,     -105,   43,      21,     -41,
                                   23,    3,     -15,   11,    -1,     -5,     5,      -1,     -1,      3,      1,
                                   3,     7,     11,    21,    39,     71,     131,    241,    443,     815,    1499,
                                   2757,  5071,  9327,  17155, 31553,  58035,  106743, 196331, 361109,  664183, 1221623,
                                   2246915};
  return v;
}

inline constexpr std::int64_t kTableLo = -20;
inline constexpr std::int64_t kTableHi = 24;

}  // namespace oracle
