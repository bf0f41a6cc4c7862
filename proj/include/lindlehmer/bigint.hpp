#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lindlehmer {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Parses an optionally signed decimal literal; throws InvalidArgument.
BigInt parse_bigint(std::string_view text);

BigInt pow(const BigInt& base, std::uint64_t exponent);

/// Least nonnegative residue of base^exponent mod modulus (modulus > 0).
BigInt powm(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

/// Least nonnegative residue of value mod modulus (modulus > 0).
BigInt mod_floor(const BigInt& value, const BigInt& modulus);

/// Natural log of |value|; value must be nonzero.
double log_abs(const BigInt& value);

BigInt from_int128(__int128 value);

inline BigInt from_u64(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

inline BigInt from_i64(std::int64_t value) {
  if (value >= 0) return from_u64(static_cast<std::uint64_t>(value));
  return -from_u64(static_cast<std::uint64_t>(-(value + 1)) + 1);
}

/// True when value fits in a signed 64-bit integer.
inline bool fits_i64(const BigInt& value) {
  return mpz_sizeinbase(value.get_mpz_t(), 2) <= 63;
}

/// Requires fits_i64(value).
std::int64_t to_i64(const BigInt& value);

}  // namespace lindlehmer
