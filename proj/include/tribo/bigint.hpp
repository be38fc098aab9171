#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tribo {

/// Arbitrary-precision signed integer used for every sequence value.
using BigInt = mpz_class;

/// Sequence subscripts. Machine width; term magnitudes are unbounded.
using Index = std::int64_t;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace tribo
