#pragma once

// Independent floating-point reference for character values, in binary128.

#include <quadmath.h>

#include <cmath>
#include <vector>

#include "lindlehmer/poly.hpp"

namespace oracle {

struct Complex128 {
  __float128 re = 0;
  __float128 im = 0;

  Complex128 operator*(const Complex128& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  double abs() const { return static_cast<double>(sqrtq(re * re + im * im)); }
};

/// F(chi_j) for every character j, evaluated term by term from the sparse polynomial.
inline std::vector<Complex128> character_values(const lindlehmer::GroupSpec& group,
                                                const lindlehmer::IntPolynomial& poly) {
  const std::size_t n = group.size();
  std::vector<Complex128> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto chi = group.tuple_of(j);
    __float128 re = 0, im = 0;
    for (const auto& [exps, coeff] : poly.terms()) {
      __float128 angle = 0;
      for (std::size_t i = 0; i < exps.size(); ++i) {
        const auto ni = group.order(i);
        angle += static_cast<__float128>((static_cast<std::uint64_t>(exps[i]) * chi[i]) % ni) / ni;
      }
      angle *= 2 * M_PIq;
      const __float128 c = coeff.get_d();
      re += c * cosq(angle);
      im += c * sinq(angle);
    }
    out[j] = {re, im};
  }
  return out;
}

/// Product of all character values, rounded to the nearest integer.
inline long long measure(const lindlehmer::GroupSpec& group, const lindlehmer::IntPolynomial& poly) {
  Complex128 acc{1, 0};
  for (const auto& v : character_values(group, poly)) acc = acc * v;
  return static_cast<long long>(roundq(acc.re));
}

}  // namespace oracle
