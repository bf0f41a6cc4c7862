#include "lindlehmer/poly.hpp"

#include "lindlehmer/errors.hpp"

namespace lindlehmer {

namespace {

constexpr std::size_t kMaxTerms = std::size_t{1} << 20;

std::string var_name(std::size_t num_vars, std::size_t index) {
  if (num_vars <= 3) return std::string(1, "xyz"[index]);
  return "x" + std::to_string(index + 1);
}

}  // namespace

IntPolynomial::IntPolynomial(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars == 0) throw InvalidArgument("polynomial needs at least one variable");
}

IntPolynomial IntPolynomial::constant(std::size_t num_vars, const BigInt& value) {
  IntPolynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), value);
  return p;
}

IntPolynomial IntPolynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw InvalidArgument("variable index exceeds number of variables");
  Exponents e(num_vars, 0);
  e[index] = 1;
  IntPolynomial p(num_vars);
  p.add_term(e, 1);
  return p;
}

IntPolynomial IntPolynomial::monomial(Exponents exponents, const BigInt& coeff) {
  IntPolynomial p(exponents.size());
  p.add_term(exponents, coeff);
  return p;
}

void IntPolynomial::add_term(const Exponents& exponents, const BigInt& coeff) {
  if (exponents.size() != num_vars_) throw InvalidArgument("exponent tuple has wrong length");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BigInt IntPolynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt IntPolynomial::value_at_ones() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

void IntPolynomial::require_same_vars(const IntPolynomial& other) const {
  if (other.num_vars_ != num_vars_) throw InvalidArgument("polynomials have different variable counts");
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  IntPolynomial out = *this;
  out += other;
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  IntPolynomial out = *this;
  out -= other;
  return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  require_same_vars(other);
  IntPolynomial out(num_vars_);
  Exponents e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < num_vars_; ++i) {
        std::uint64_t sum = std::uint64_t{ea[i]} + eb[i];
        if (sum > UINT32_MAX) throw InvalidArgument("exponent overflow in product");
        e[i] = static_cast<std::uint32_t>(sum);
      }
      out.add_term(e, ca * cb);
    }
    if (out.terms_.size() > kMaxTerms) throw ResourceLimit("polynomial has too many terms");
  }
  return out;
}

IntPolynomial IntPolynomial::pow(std::uint32_t exponent) const {
  IntPolynomial result = constant(num_vars_, 1);
  IntPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant_term = true;
    std::string mono;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(num_vars_, i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      constant_term = false;
    }
    BigInt mag = abs(c);
    bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (constant_term) {
      out += lindlehmer::to_string(mag);
    } else {
      if (mag != 1) out += lindlehmer::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

GroupRingElement::GroupRingElement(GroupSpec group, std::vector<BigInt> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (cmp(group_.cardinality(), static_cast<unsigned long>(coeffs_.size())) != 0) {
    throw InvalidArgument("group ring element must have |G| coefficients");
  }
}

GroupRingElement GroupRingElement::zero(const GroupSpec& group, std::size_t cap) {
  return GroupRingElement(group, std::vector<BigInt>(group.size(cap)));
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

BigInt GroupRingElement::value_at_ones() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

IntPolynomial GroupRingElement::to_polynomial() const {
  IntPolynomial p(group_.rank());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) p.add_term(group_.tuple_of(i), coeffs_[i]);
  }
  return p;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& other) const {
  if (!(other.group_ == group_)) throw InvalidArgument("group ring elements over different groups");
  std::vector<BigInt> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coeffs_[i];
  return GroupRingElement(group_, std::move(out));
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& other) const {
  if (!(other.group_ == group_)) throw InvalidArgument("group ring elements over different groups");
  const std::size_t n = coeffs_.size();
  const auto& orders = group_.orders();
  std::vector<BigInt> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (sgn(coeffs_[a]) == 0) continue;
    auto ta = group_.tuple_of(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (sgn(other.coeffs_[b]) == 0) continue;
      auto tb = group_.tuple_of(b);
      for (std::size_t i = 0; i < tb.size(); ++i) tb[i] = (tb[i] + ta[i]) % orders[i];
      out[group_.index_of(tb)] += coeffs_[a] * other.coeffs_[b];
    }
  }
  return GroupRingElement(group_, std::move(out));
}

GroupRingElement reduce_mod_ideal(const IntPolynomial& poly, const GroupSpec& group, std::size_t cap) {
  if (poly.num_vars() != group.rank()) {
    throw InvalidArgument("polynomial has " + std::to_string(poly.num_vars()) +
                          " variables but the group has rank " + std::to_string(group.rank()));
  }
  std::vector<BigInt> coeffs(group.size(cap));
  const auto& orders = group.orders();
  std::vector<std::uint32_t> folded(orders.size());
  for (const auto& [e, c] : poly.terms()) {
    for (std::size_t i = 0; i < orders.size(); ++i) folded[i] = e[i] % orders[i];
    coeffs[group.index_of(folded)] += c;
  }
  return GroupRingElement(group, std::move(coeffs));
}

bool is_zero_mod_ideal(const IntPolynomial& poly, const GroupSpec& group, std::size_t cap) {
  return reduce_mod_ideal(poly, group, cap).is_zero();
}

IntPolynomial trivial_bound_poly(const GroupSpec& group, std::size_t cap) {
  if (cmp(group.cardinality(), 3) < 0) throw InvalidArgument("trivial bound needs |G| >= 3");
  // Every exponent tuple with e_i < n_i appears once in the expanded product.
  const std::size_t n = group.size(cap);
  IntPolynomial p(group.rank());
  for (std::size_t i = 0; i < n; ++i) p.add_term(group.tuple_of(i), 1);
  p.add_term(Exponents(group.rank(), 0), -1);
  return p;
}

namespace {

/// Exponent s with chi_char(g) = zeta_L^s.
std::uint64_t pairing(const GroupSpec& group, std::uint64_t exponent,
                      const std::vector<std::uint32_t>& g, const std::vector<std::uint32_t>& chi) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::uint64_t scale = exponent / group.order(i);
    s = (s + (std::uint64_t{g[i]} * chi[i] % group.order(i)) * scale) % exponent;
  }
  return s;
}

}  // namespace

std::vector<CyclotomicInteger> evaluate_characters_exact(const GroupRingElement& element) {
  const GroupSpec& group = element.group();
  const std::uint64_t exponent = group.exponent();
  const std::size_t n = element.size();
  std::vector<std::vector<std::uint32_t>> tuples;
  tuples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tuples.push_back(group.tuple_of(i));

  std::vector<CyclotomicInteger> values;
  values.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    UPoly buckets(exponent);
    for (std::size_t g = 0; g < n; ++g) {
      if (sgn(element.coeffs()[g]) == 0) continue;
      buckets[pairing(group, exponent, tuples[g], tuples[j])] += element.coeffs()[g];
    }
    trim(buckets);
    values.emplace_back(exponent, std::move(buckets));
  }
  return values;
}

std::vector<BigInt> coefficient_recovery(const std::vector<CyclotomicInteger>& values,
                                         const GroupSpec& group) {
  const std::size_t n = group.size();
  if (values.size() != n) throw InvalidArgument("need one value per character");
  const std::uint64_t exponent = group.exponent();
  std::vector<std::vector<std::uint32_t>> tuples;
  tuples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tuples.push_back(group.tuple_of(i));

  const BigInt order = static_cast<unsigned long>(n);
  std::vector<BigInt> coeffs(n);
  for (std::size_t t = 0; t < n; ++t) {
    CyclotomicInteger acc(exponent);
    for (std::size_t j = 0; j < n; ++j) {
      if (values[j].order() != exponent) throw InvalidArgument("character value has wrong cyclotomic order");
      std::uint64_t s = pairing(group, exponent, tuples[t], tuples[j]);
      acc += values[j] * CyclotomicInteger::root_power(exponent, (exponent - s) % exponent);
    }
    auto integer = acc.as_integer();
    if (!integer) throw NonIntegralResult("inverse transform left an irrational value");
    if (!mpz_divisible_p(integer->get_mpz_t(), order.get_mpz_t())) {
      throw NonIntegralResult("inverse transform is not divisible by |G|");
    }
    mpz_divexact(coeffs[t].get_mpz_t(), integer->get_mpz_t(), order.get_mpz_t());
  }
  return coeffs;
}

}  // namespace lindlehmer
