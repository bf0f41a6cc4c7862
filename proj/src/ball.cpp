#include "lindlehmer/ball.hpp"

#include <cmath>

#include "lindlehmer/poly.hpp"

namespace lindlehmer {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

/// rad += |x| * 2^(1 - prec(x)), an upper bound on one rounding of x.
void add_rounding_error(Mpfr& rad, const Mpfr& x) {
  if (mpfr_zero_p(x.get())) return;
  Mpfr e(kRadPrec);
  mpfr_abs(e.get(), x.get(), MPFR_RNDU);
  mpfr_mul_2si(e.get(), e.get(), 1 - static_cast<long>(x.prec()), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), e.get(), MPFR_RNDU);
}

Mpfr abs_up(const Mpfr& x) {
  Mpfr out(kRadPrec);
  mpfr_abs(out.get(), x.get(), MPFR_RNDU);
  return out;
}

}  // namespace

RealBall::RealBall(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {}

void RealBall::widen_by_rounding() { add_rounding_error(rad_, mid_); }

RealBall RealBall::from_integer(const BigInt& value, mpfr_prec_t prec) {
  RealBall b(prec);
  if (mpfr_set_z(b.mid_.get(), value.get_mpz_t(), MPFR_RNDN) != 0) b.widen_by_rounding();
  return b;
}

RealBall RealBall::operator+(const RealBall& other) const {
  RealBall out(prec());
  int inexact = mpfr_add(out.mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);
  mpfr_add(out.rad_.get(), rad_.get(), other.rad_.get(), MPFR_RNDU);
  if (inexact != 0) out.widen_by_rounding();
  return out;
}

RealBall RealBall::operator-(const RealBall& other) const {
  RealBall out(prec());
  int inexact = mpfr_sub(out.mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);
  mpfr_add(out.rad_.get(), rad_.get(), other.rad_.get(), MPFR_RNDU);
  if (inexact != 0) out.widen_by_rounding();
  return out;
}

RealBall RealBall::operator*(const RealBall& other) const {
  RealBall out(prec());
  int inexact = mpfr_mul(out.mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);
  // |a| rb + |b| ra + ra rb
  Mpfr t(kRadPrec);
  Mpfr abs_a = abs_up(mid_);
  Mpfr abs_b = abs_up(other.mid_);
  mpfr_mul(t.get(), abs_a.get(), other.rad_.get(), MPFR_RNDU);
  mpfr_add(out.rad_.get(), out.rad_.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), abs_b.get(), rad_.get(), MPFR_RNDU);
  mpfr_add(out.rad_.get(), out.rad_.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), rad_.get(), other.rad_.get(), MPFR_RNDU);
  mpfr_add(out.rad_.get(), out.rad_.get(), t.get(), MPFR_RNDU);
  if (inexact != 0) out.widen_by_rounding();
  return out;
}

RealBall RealBall::divided_by(std::uint64_t divisor) const {
  RealBall out(prec());
  int inexact = mpfr_div_ui(out.mid_.get(), mid_.get(), divisor, MPFR_RNDN);
  mpfr_div_ui(out.rad_.get(), rad_.get(), divisor, MPFR_RNDU);
  if (inexact != 0) out.widen_by_rounding();
  return out;
}

bool RealBall::contains_zero() const {
  return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0;
}

std::optional<BigInt> RealBall::unique_integer() const {
  mpfr_prec_t wide = prec() + kRadPrec + 2;
  Mpfr lo(wide), hi(wide);
  mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  BigInt lo_int, hi_int;
  mpfr_get_z(lo_int.get_mpz_t(), lo.get(), MPFR_RNDU);
  mpfr_get_z(hi_int.get_mpz_t(), hi.get(), MPFR_RNDD);
  if (lo_int != hi_int) return std::nullopt;
  return lo_int;
}

RealBall RealBall::cos() const {
  RealBall out(prec());
  int inexact = mpfr_cos(out.mid_.get(), mid_.get(), MPFR_RNDN);
  mpfr_set(out.rad_.get(), rad_.get(), MPFR_RNDU);
  if (inexact != 0) out.widen_by_rounding();
  return out;
}

RealBall RealBall::sin() const {
  RealBall out(prec());
  int inexact = mpfr_sin(out.mid_.get(), mid_.get(), MPFR_RNDN);
  mpfr_set(out.rad_.get(), rad_.get(), MPFR_RNDU);
  if (inexact != 0) out.widen_by_rounding();
  return out;
}

RealBall RealBall::pi(mpfr_prec_t prec) {
  RealBall out(prec);
  if (mpfr_const_pi(out.mid_.get(), MPFR_RNDN) != 0) out.widen_by_rounding();
  return out;
}

double ComplexBall::magnitude_upper() const {
  Mpfr r(kRadPrec), i(kRadPrec);
  mpfr_abs(r.get(), re.mid().get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), re.rad().get(), MPFR_RNDU);
  mpfr_abs(i.get(), im.mid().get(), MPFR_RNDU);
  mpfr_add(i.get(), i.get(), im.rad().get(), MPFR_RNDU);
  mpfr_hypot(r.get(), r.get(), i.get(), MPFR_RNDU);
  return mpfr_get_d(r.get(), MPFR_RNDU);
}

double ComplexBall::magnitude_lower() const {
  auto lower = [](const RealBall& b) {
    Mpfr m(b.prec());
    mpfr_abs(m.get(), b.mid().get(), MPFR_RNDN);
    mpfr_sub(m.get(), m.get(), b.rad().get(), MPFR_RNDD);
    double d = mpfr_get_d(m.get(), MPFR_RNDD);
    return d > 0 ? d : 0.0;
  };
  double r = lower(re);
  double i = lower(im);
  return std::nextafter(std::hypot(r, i) * (1 - 1e-15), 0.0);
}

ComplexBall unit_root_ball(std::uint64_t order, std::uint64_t power, mpfr_prec_t prec) {
  power %= order;
  if (power == 0) return {RealBall::from_integer(1, prec), RealBall(prec)};
  if (2 * power == order) return {RealBall::from_integer(-1, prec), RealBall(prec)};
  if (4 * power == order) return {RealBall(prec), RealBall::from_integer(1, prec)};
  if (4 * power == 3 * order) return {RealBall(prec), RealBall::from_integer(-1, prec)};
  RealBall theta = (RealBall::pi(prec) * RealBall::from_integer(from_u64(2 * power), prec)).divided_by(order);
  return {theta.cos(), theta.sin()};
}

std::vector<ComplexBall> character_value_balls(const GroupRingElement& element, mpfr_prec_t prec) {
  const GroupSpec& group = element.group();
  const std::uint64_t exponent = group.exponent();
  const std::size_t n = element.size();
  std::vector<ComplexBall> roots;
  roots.reserve(exponent);
  for (std::uint64_t s = 0; s < exponent; ++s) roots.push_back(unit_root_ball(exponent, s, prec));

  std::vector<std::vector<std::uint32_t>> tuples;
  tuples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tuples.push_back(group.tuple_of(i));

  std::vector<ComplexBall> values;
  values.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    // Bucket the integer coefficients by root power first: exact, then one ball op per bucket.
    std::vector<BigInt> buckets(exponent);
    for (std::size_t g = 0; g < n; ++g) {
      if (sgn(element.coeffs()[g]) == 0) continue;
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < tuples[g].size(); ++i) {
        std::uint64_t scale = exponent / group.order(i);
        s = (s + (std::uint64_t{tuples[g][i]} * tuples[j][i] % group.order(i)) * scale) % exponent;
      }
      buckets[s] += element.coeffs()[g];
    }
    ComplexBall acc(prec);
    for (std::uint64_t s = 0; s < exponent; ++s) {
      if (sgn(buckets[s]) != 0) acc = acc + roots[s].scaled(buckets[s]);
    }
    values.push_back(std::move(acc));
  }
  return values;
}

}  // namespace lindlehmer
