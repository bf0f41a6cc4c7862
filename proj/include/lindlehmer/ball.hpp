#pragma once

#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "lindlehmer/bigint.hpp"

namespace lindlehmer {

class GroupRingElement;

/// Owning handle for an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(value_, prec); mpfr_set_zero(value_, 1); }
  Mpfr(const Mpfr& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  Mpfr& operator=(const Mpfr& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  ~Mpfr() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(value_); }

 private:
  mpfr_t value_;
};

/// A real interval [mid - rad, mid + rad] that is guaranteed to contain the true value.
class RealBall {
 public:
  explicit RealBall(mpfr_prec_t prec);

  static RealBall from_integer(const BigInt& value, mpfr_prec_t prec);

  const Mpfr& mid() const { return mid_; }
  const Mpfr& rad() const { return rad_; }
  mpfr_prec_t prec() const { return mid_.prec(); }

  RealBall operator+(const RealBall& other) const;
  RealBall operator-(const RealBall& other) const;
  RealBall operator*(const RealBall& other) const;
  RealBall divided_by(std::uint64_t divisor) const;

  bool contains_zero() const;

  /// The single integer inside the ball, if there is exactly one.
  std::optional<BigInt> unique_integer() const;

  /// Correctly rounded cos and sin of the midpoint, widened by the input radius.
  RealBall cos() const;
  RealBall sin() const;

  static RealBall pi(mpfr_prec_t prec);

 private:
  void widen_by_rounding();

  Mpfr mid_;
  Mpfr rad_;
};

struct ComplexBall {
  RealBall re;
  RealBall im;

  explicit ComplexBall(mpfr_prec_t prec) : re(prec), im(prec) {}
  ComplexBall(RealBall r, RealBall i) : re(std::move(r)), im(std::move(i)) {}

  ComplexBall operator+(const ComplexBall& o) const { return {re + o.re, im + o.im}; }
  ComplexBall operator*(const ComplexBall& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexBall scaled(const BigInt& c) const {
    RealBall k = RealBall::from_integer(c, re.prec());
    return {re * k, im * k};
  }

  /// Upper bound on |z| as a double (rounded up).
  double magnitude_upper() const;
  /// Lower bound on |z| as a double (rounded down, clamped at 0).
  double magnitude_lower() const;
};

/// exp(2 pi i * power / order).
ComplexBall unit_root_ball(std::uint64_t order, std::uint64_t power, mpfr_prec_t prec);

/// Enclosures of F(chi_j) for every character j, in character order.
std::vector<ComplexBall> character_value_balls(const GroupRingElement& element, mpfr_prec_t prec);

}  // namespace lindlehmer
