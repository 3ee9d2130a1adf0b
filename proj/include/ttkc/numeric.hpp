/// @file  numeric.hpp
/// @brief Exact arithmetic types used for counts, inner products and weights

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ttkc {

/// Signed arbitrary-precision integer (model counts, inner products)
using big_count = mpz_class;
/// Exact rational (weighted model counts)
using rational = mpq_class;

inline big_count pow2(unsigned long exponent) {
  big_count out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

/// Parses `7`, `3/4` or `0.125` into an exact rational; throws
/// std::invalid_argument on malformed input.
rational parse_rational(const std::string &text);

namespace detail {

// Overflow-checked int64 arithmetic for fast paths that fall back to GMP.
inline bool add_checked(std::int64_t &acc, std::int64_t v) noexcept {
  return !__builtin_add_overflow(acc, v, &acc);
}
inline bool mul_checked(std::int64_t a, std::int64_t b,
                        std::int64_t &out) noexcept {
  return !__builtin_mul_overflow(a, b, &out);
}

} // namespace detail
} // namespace ttkc
