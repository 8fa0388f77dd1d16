#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace diatomic {

/// Arbitrary-precision signed integer used for every sequence value and
/// series coefficient.
using Integer = mpz_class;

/// Parses a non-negative integer written in decimal, or in hexadecimal with a
/// leading "0x"/"0X". Throws std::invalid_argument on anything else.
Integer parse_natural(std::string_view text);

std::string to_string(const Integer& value);

inline bool fits_i64(const Integer& value) {
  return mpz_sizeinbase(value.get_mpz_t(), 2) <= 63;
}

}  // namespace diatomic
