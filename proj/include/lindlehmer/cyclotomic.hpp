#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lindlehmer/bigint.hpp"

namespace lindlehmer {

// Elementary number theory on machine integers.

bool is_prime(std::uint64_t n);

/// (p, a) with n = p^a and a >= 1, or nothing.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

// Dense univariate integer polynomials, coefficient of x^i at index i,
// no trailing zeros (the zero polynomial is empty).

using UPoly = std::vector<BigInt>;

void trim(UPoly& p);
int degree(const UPoly& p);
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
BigInt upoly_eval(const UPoly& p, const BigInt& x);

/// Quotient and remainder by a monic divisor.
std::pair<UPoly, UPoly> divmod_monic(const UPoly& a, const UPoly& monic);

/// Phi_d, built by dividing x^d - 1 by Phi_e for the proper divisors e of d.
/// Cached per process; safe to call concurrently.
const UPoly& cyclotomic_polynomial(std::uint64_t d);

/// Res(a, b) = lc(a)^deg(b) * prod_{a(r)=0} b(r), via the Sylvester determinant.
BigInt resultant_sylvester(const UPoly& a, const UPoly& b);

/// Same quantity via the Euclidean remainder sequence over the rationals.
BigInt resultant_euclid(const UPoly& a, const UPoly& b);

/// An element of Z[zeta_L], stored as its residue modulo Phi_L (degree < phi(L)).
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::uint64_t order, UPoly coeffs = {});

  /// zeta_L^power.
  static CyclotomicInteger root_power(std::uint64_t order, std::uint64_t power);

  std::uint64_t order() const noexcept { return order_; }
  const UPoly& coeffs() const noexcept { return coeffs_; }

  /// The rational integer this element equals, if it is one.
  std::optional<BigInt> as_integer() const;

  CyclotomicInteger operator+(const CyclotomicInteger& other) const;
  CyclotomicInteger operator-(const CyclotomicInteger& other) const;
  CyclotomicInteger operator*(const CyclotomicInteger& other) const;
  CyclotomicInteger& operator+=(const CyclotomicInteger& other);

  friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

 private:
  std::uint64_t order_;
  UPoly coeffs_;
};

}  // namespace lindlehmer
