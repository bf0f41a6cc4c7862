#include "lindlehmer/bigint.hpp"

#include <cmath>

#include "lindlehmer/errors.hpp"

namespace lindlehmer {

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw InvalidArgument("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidArgument("invalid integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BigInt powm(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  BigInt out;
  BigInt b = mod_floor(base, modulus);
  mpz_powm(out.get_mpz_t(), b.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

BigInt mod_floor(const BigInt& value, const BigInt& modulus) {
  BigInt out;
  mpz_fdiv_r(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

double log_abs(const BigInt& value) {
  signed long exp2 = 0;
  double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exp2) * std::log(2.0);
}

BigInt from_int128(__int128 value) {
  bool negative = value < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                   : static_cast<unsigned __int128>(value);
  std::uint64_t words[2] = {static_cast<std::uint64_t>(mag),
                            static_cast<std::uint64_t>(mag >> 64U)};
  BigInt out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  return negative ? BigInt(-out) : out;
}

std::int64_t to_i64(const BigInt& value) {
  if (!fits_i64(value)) throw InvalidArgument("integer does not fit in 64 bits");
  std::uint64_t word = 0;
  mpz_export(&word, nullptr, -1, sizeof(word), 0, 0, value.get_mpz_t());
  auto mag = static_cast<std::int64_t>(word);
  return sgn(value) < 0 ? -mag : mag;
}

}  // namespace lindlehmer
