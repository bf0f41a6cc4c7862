#include "lindlehmer/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "lindlehmer/errors.hpp"
#include "lindlehmer/linalg.hpp"

namespace lindlehmer {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  unsigned alpha = 0;
  while (n % p == 0) {
    n /= p;
    ++alpha;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, alpha);
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

BigInt upoly_eval(const UPoly& p, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::pair<UPoly, UPoly> divmod_monic(const UPoly& a, const UPoly& monic) {
  if (monic.empty() || monic.back() != 1) throw InvalidArgument("divisor must be monic");
  UPoly rem = a;
  trim(rem);
  int dm = degree(monic);
  if (degree(rem) < dm) return {UPoly{}, rem};
  UPoly quot(rem.size() - monic.size() + 1);
  for (int i = degree(rem); i >= dm; --i) {
    BigInt c = rem[i];
    if (sgn(c) == 0) continue;
    quot[i - dm] = c;
    for (int j = 0; j <= dm; ++j) rem[i - dm + j] -= c * monic[j];
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

namespace {

std::mutex& cyclotomic_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, std::unique_ptr<const UPoly>>& cyclotomic_cache() {
  static std::map<std::uint64_t, std::unique_ptr<const UPoly>> cache;
  return cache;
}

const UPoly& cyclotomic_locked(std::uint64_t d) {
  auto& cache = cyclotomic_cache();
  if (auto it = cache.find(d); it != cache.end()) return *it->second;
  UPoly p(d + 1);
  p[0] = -1;
  p[d] = 1;
  for (auto e : divisors(d)) {
    if (e == d) continue;
    auto [q, r] = divmod_monic(p, cyclotomic_locked(e));
    if (!r.empty()) throw VerificationFailure("cyclotomic sieve left a remainder");
    p = std::move(q);
  }
  return *cache.emplace(d, std::make_unique<const UPoly>(std::move(p))).first->second;
}

}  // namespace

const UPoly& cyclotomic_polynomial(std::uint64_t d) {
  if (d == 0) throw InvalidArgument("cyclotomic index must be positive");
  std::lock_guard lock(cyclotomic_mutex());
  return cyclotomic_locked(d);
}

BigInt resultant_sylvester(const UPoly& a, const UPoly& b) {
  int m = degree(a);
  int n = degree(b);
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  std::size_t size = static_cast<std::size_t>(m + n);
  Matrix<BigInt> s(size, size);
  for (int row = 0; row < n; ++row) {
    for (int j = 0; j <= m; ++j) s(row, row + j) = a[m - j];
  }
  for (int row = 0; row < m; ++row) {
    for (int j = 0; j <= n; ++j) s(n + row, row + j) = b[n - j];
  }
  return bareiss_determinant(std::move(s));
}

BigInt resultant_euclid(const UPoly& a_in, const UPoly& b_in) {
  using QPoly = std::vector<mpq_class>;
  auto to_q = [](const UPoly& p) {
    QPoly q(p.begin(), p.end());
    while (!q.empty() && sgn(q.back()) == 0) q.pop_back();
    return q;
  };
  QPoly a = to_q(a_in);
  QPoly b = to_q(b_in);
  if (a.empty() || b.empty()) return 0;
  mpq_class scale = 1;
  while (true) {
    std::size_t m = a.size() - 1;
    std::size_t n = b.size() - 1;
    if (n == 0) {
      mpq_class r = scale;
      for (std::size_t i = 0; i < m; ++i) r *= b[0];
      r.canonicalize();
      if (r.get_den() != 1) throw VerificationFailure("non-integral resultant");
      return r.get_num();
    }
    // a mod b over Q.
    QPoly r = a;
    for (std::size_t i = m + 1; i-- > n;) {
      if (sgn(r[i]) == 0) continue;
      mpq_class c = r[i] / b[n];
      for (std::size_t j = 0; j <= n; ++j) r[i - n + j] -= c * b[j];
    }
    r.resize(n);
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    if (r.empty()) return 0;
    std::size_t rho = r.size() - 1;
    if ((m * n) % 2 == 1) scale = -scale;
    for (std::size_t i = 0; i < m - rho; ++i) scale *= b[n];
    a = std::move(b);
    b = std::move(r);
  }
}

CyclotomicInteger::CyclotomicInteger(std::uint64_t order, UPoly coeffs) : order_(order) {
  if (order == 0) throw InvalidArgument("cyclotomic order must be positive");
  const UPoly& phi = cyclotomic_polynomial(order);
  coeffs_ = divmod_monic(coeffs, phi).second;
}

CyclotomicInteger CyclotomicInteger::root_power(std::uint64_t order, std::uint64_t power) {
  UPoly p(power % order + 1);
  p.back() = 1;
  return CyclotomicInteger(order, std::move(p));
}

std::optional<BigInt> CyclotomicInteger::as_integer() const {
  if (coeffs_.size() > 1) return std::nullopt;
  return coeffs_.empty() ? BigInt(0) : coeffs_[0];
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& other) const {
  if (other.order_ != order_) throw InvalidArgument("mismatched cyclotomic orders");
  return CyclotomicInteger(order_, upoly_add(coeffs_, other.coeffs_));
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& other) const {
  if (other.order_ != order_) throw InvalidArgument("mismatched cyclotomic orders");
  return CyclotomicInteger(order_, upoly_sub(coeffs_, other.coeffs_));
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& other) const {
  if (other.order_ != order_) throw InvalidArgument("mismatched cyclotomic orders");
  return CyclotomicInteger(order_, upoly_mul(coeffs_, other.coeffs_));
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& other) {
  *this = *this + other;
  return *this;
}

}  // namespace lindlehmer
