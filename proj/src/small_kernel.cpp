#include "small_kernel.hpp"

#include <algorithm>
#include <numeric>

#include "lindlehmer/cyclotomic.hpp"
#include "lindlehmer/linalg.hpp"

namespace lindlehmer::detail {

namespace {

u128 magnitude(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

bool bareiss_i128(std::vector<i128>& m, std::size_t n, i128& det) {
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r * n + k] == 0) ++r;
      if (r == n) {
        det = 0;
        return true;
      }
      for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[r * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        i128 a, b;
        if (__builtin_mul_overflow(m[i * n + j], m[k * n + k], &a)) return false;
        if (__builtin_mul_overflow(m[i * n + k], m[k * n + j], &b)) return false;
        if (__builtin_sub_overflow(a, b, &a)) return false;
        m[i * n + j] = a / prev;
      }
    }
    prev = m[k * n + k];
  }
  det = sign * m[n * n - 1];
  return true;
}

}  // namespace

SmallKernel::SmallKernel(const GroupSpec& group, std::size_t cap) : n_(group.size(cap)) {
  const std::uint64_t exponent = group.exponent();
  const std::size_t k = group.rank();
  std::vector<std::vector<std::uint32_t>> tuples(n_);
  for (std::size_t g = 0; g < n_; ++g) tuples[g] = group.tuple_of(g);

  std::vector<bool> seen(n_, false);
  std::vector<std::uint32_t> image(k);
  for (std::size_t j = 0; j < n_; ++j) {
    if (seen[j]) continue;
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t ni = group.order(i);
      const std::uint64_t oi = ni / std::gcd<std::uint64_t>(ni, tuples[j][i]);
      d = std::lcm(d, oi);
    }
    Orbit orbit;
    orbit.order = d;
    orbit.phi = static_cast<unsigned>(euler_phi(d));
    orbit.size = 0;
    for (std::uint64_t u = 1; u <= d; ++u) {
      if (std::gcd(u, d) != 1) continue;
      for (std::size_t i = 0; i < k; ++i) image[i] = static_cast<std::uint32_t>((u * tuples[j][i]) % group.order(i));
      std::size_t idx = group.index_of(image);
      if (!seen[idx]) {
        seen[idx] = true;
        ++orbit.size;
      }
    }

    const UPoly& phi_d = cyclotomic_polynomial(d);
    const unsigned f = orbit.phi;
    orbit.powers.assign(d * f, 0);
    for (std::uint64_t r = 0; r < d; ++r) {
      UPoly mono(r + 1);
      mono[r] = 1;
      UPoly rem = divmod_monic(mono, phi_d).second;
      for (std::size_t t = 0; t < rem.size(); ++t) orbit.powers[r * f + t] = rem[t].get_si();
    }
    if (f == 2) {
      orbit.a0 = phi_d[0].get_si();
      orbit.a1 = phi_d[1].get_si();
    }
    orbit.table.assign(n_ * f, 0);
    for (std::size_t g = 0; g < n_; ++g) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < k; ++i) {
        s += static_cast<std::uint64_t>(tuples[g][i]) * tuples[j][i] % group.order(i) * (exponent / group.order(i));
      }
      s %= exponent;
      const std::uint64_t r = s / (exponent / d);
      std::copy_n(orbit.powers.begin() + static_cast<std::ptrdiff_t>(r * f), f,
                  orbit.table.begin() + static_cast<std::ptrdiff_t>(g * f));
    }
    orbits_.push_back(std::move(orbit));
  }
  std::stable_sort(orbits_.begin(), orbits_.end(), [](const Orbit& a, const Orbit& b) { return a.phi < b.phi; });
}

bool SmallKernel::norm(const Orbit& orbit, const std::int64_t* v, i128& out) const {
  const unsigned f = orbit.phi;
  if (f == 1) {
    out = v[0];
    return true;
  }
  if (f == 2) {
    const i128 v0 = v[0], v1 = v[1];
    out = v0 * v0 - orbit.a1 * v0 * v1 + orbit.a0 * v1 * v1;
    return true;
  }
  // Column c holds v * x^c in the power basis.
  std::vector<i128> m(static_cast<std::size_t>(f) * f, 0);
  const std::uint64_t d = orbit.order;
  for (unsigned c = 0; c < f; ++c) {
    for (unsigned s = 0; s < f; ++s) {
      if (v[s] == 0) continue;
      const std::int64_t* p = orbit.powers.data() + ((s + c) % d) * f;
      for (unsigned r = 0; r < f; ++r) m[r * f + c] += static_cast<i128>(v[s]) * p[r];
    }
  }
  return bareiss_i128(m, f, out);
}

SmallKernel::Outcome SmallKernel::evaluate(const std::int32_t* coeffs, u128 bound) const {
  std::int64_t v[64];
  std::vector<std::int64_t> wide;
  i128 product = 1;
  for (const Orbit& orbit : orbits_) {
    const unsigned f = orbit.phi;
    std::int64_t* acc = v;
    if (f > 64) {
      wide.assign(f, 0);
      acc = wide.data();
    } else {
      std::fill_n(acc, f, 0);
    }
    const std::int64_t* row = orbit.table.data();
    for (std::size_t g = 0; g < n_; ++g, row += f) {
      const std::int64_t c = coeffs[g];
      if (c == 0) continue;
      for (unsigned t = 0; t < f; ++t) acc[t] += c * row[t];
    }
    i128 value;
    if (!norm(orbit, acc, value)) return {Status::overflow, 0};
    if (value == 0) return {Status::zero, 0};
    if (__builtin_mul_overflow(product, value, &product)) {
      return {bound == kNoBound ? Status::overflow : Status::exceeded, 0};
    }
    if (magnitude(product) > bound) return {Status::exceeded, product};
  }
  return {Status::value, product};
}

}  // namespace lindlehmer::detail
