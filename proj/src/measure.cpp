#include "lindlehmer/measure.hpp"

#include <algorithm>
#include <functional>

#include "lindlehmer/ball.hpp"
#include "lindlehmer/cyclotomic.hpp"
#include "lindlehmer/errors.hpp"
#include "lindlehmer/linalg.hpp"

namespace lindlehmer {

std::string to_string(MeasureMethod method) {
  switch (method) {
    case MeasureMethod::determinant: return "determinant";
    case MeasureMethod::resultant: return "resultant";
    case MeasureMethod::ball: return "ball";
  }
  return "unknown";
}

MeasureMethod parse_measure_method(std::string_view name) {
  if (name == "determinant") return MeasureMethod::determinant;
  if (name == "resultant") return MeasureMethod::resultant;
  if (name == "ball" || name == "float") return MeasureMethod::ball;
  throw InvalidArgument("unknown measure method '" + std::string(name) + "'");
}

namespace {

MeasureResult make_result(BigInt m, const GroupSpec& group, MeasureMethod method) {
  MeasureResult r;
  r.m_int = std::move(m);
  r.method = method;
  if (sgn(r.m_int) != 0) r.log_measure = log_abs(r.m_int) / group.cardinality().get_d();
  return r;
}

// Z[x_1..x_m] / (Phi_{d_1}(x_1), ..., Phi_{d_m}(x_m)), dense in the monomial basis
// x^e with e_i < phi(d_i), first coordinate slowest. With m = 0 this is Z.
struct TensorContext {
  using Sparse = std::vector<std::pair<std::size_t, BigInt>>;

  std::vector<std::uint64_t> orders;
  std::vector<std::size_t> phis;
  std::vector<std::size_t> strides;
  std::size_t size = 1;
  /// reductions[i][e] = x_i^e mod Phi_{d_i}, for e < max(d_i, 2 phi(d_i) - 1).
  std::vector<std::vector<Sparse>> reductions;

  explicit TensorContext(std::vector<std::uint64_t> divisor_orders) : orders(std::move(divisor_orders)) {
    const std::size_t m = orders.size();
    phis.resize(m);
    strides.resize(m);
    reductions.resize(m);
    for (std::size_t i = 0; i < m; ++i) phis[i] = euler_phi(orders[i]);
    for (std::size_t i = m; i-- > 0;) {
      strides[i] = size;
      size *= phis[i];
    }
    for (std::size_t i = 0; i < m; ++i) {
      const UPoly& phi = cyclotomic_polynomial(orders[i]);
      const std::size_t count = std::max<std::size_t>(orders[i], 2 * phis[i]);
      UPoly power{1};
      for (std::size_t e = 0; e < count; ++e) {
        Sparse sparse;
        for (std::size_t t = 0; t < power.size(); ++t) {
          if (sgn(power[t]) != 0) sparse.emplace_back(t, power[t]);
        }
        reductions[i].push_back(std::move(sparse));
        power.insert(power.begin(), BigInt(0));
        power = divmod_monic(power, phi).second;
      }
    }
  }
};

class TensorElem {
 public:
  TensorElem(const TensorContext* ctx, std::vector<BigInt> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {}

  static TensorElem zero(const TensorContext* ctx) { return {ctx, std::vector<BigInt>(ctx->size)}; }
  static TensorElem one(const TensorContext* ctx) {
    TensorElem e = zero(ctx);
    e.c_[0] = 1;
    return e;
  }

  const std::vector<BigInt>& coeffs() const { return c_; }
  std::vector<BigInt>& coeffs() { return c_; }

  TensorElem operator+(const TensorElem& o) const {
    TensorElem out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
  }
  TensorElem operator-(const TensorElem& o) const {
    TensorElem out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
    return out;
  }
  TensorElem operator-() const {
    TensorElem out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }
  TensorElem operator*(const TensorElem& o) const {
    const std::size_t m = ctx_->orders.size();
    if (m == 0) return {ctx_, {c_[0] * o.c_[0]}};
    TensorElem out = zero(ctx_);
    std::vector<std::size_t> ta(m), tb(m);
    for (std::size_t a = 0; a < c_.size(); ++a) {
      if (sgn(c_[a]) == 0) continue;
      unflatten(a, ta);
      for (std::size_t b = 0; b < o.c_.size(); ++b) {
        if (sgn(o.c_[b]) == 0) continue;
        unflatten(b, tb);
        BigInt coeff = c_[a] * o.c_[b];
        accumulate(out.c_, 0, 0, coeff, ta, tb);
      }
    }
    return out;
  }

  /// Adds coeff * prod_i x_i^{e_i} with arbitrary small exponents e_i < reductions[i].size().
  void add_monomial(const std::vector<std::size_t>& exps, const BigInt& coeff) {
    std::vector<std::size_t> zeros(exps.size(), 0);
    accumulate(c_, 0, 0, coeff, exps, zeros);
  }

 private:
  void unflatten(std::size_t index, std::vector<std::size_t>& tuple) const {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      tuple[i] = index / ctx_->strides[i];
      index %= ctx_->strides[i];
    }
  }

  void accumulate(std::vector<BigInt>& out, std::size_t dim, std::size_t offset, const BigInt& coeff,
                  const std::vector<std::size_t>& ta, const std::vector<std::size_t>& tb) const {
    if (dim == ctx_->orders.size()) {
      out[offset] += coeff;
      return;
    }
    for (const auto& [idx, r] : ctx_->reductions[dim][ta[dim] + tb[dim]]) {
      accumulate(out, dim + 1, offset + idx * ctx_->strides[dim], coeff * r, ta, tb);
    }
  }

  const TensorContext* ctx_;
  std::vector<BigInt> c_;
};

std::vector<std::vector<std::uint64_t>> divisor_tuples(const GroupSpec& group) {
  std::vector<std::vector<std::uint64_t>> per_coord;
  for (auto n : group.orders()) per_coord.push_back(divisors(n));
  std::vector<std::vector<std::uint64_t>> out{{}};
  for (const auto& choices : per_coord) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& prefix : out) {
      for (auto d : choices) {
        auto t = prefix;
        t.push_back(d);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

BigInt divisor_tuple_factor(const GroupRingElement& element, const std::vector<std::uint64_t>& divisor_orders) {
  const GroupSpec& group = element.group();
  const std::size_t k = group.rank();
  if (divisor_orders.size() != k) throw InvalidArgument("divisor tuple has wrong length");
  for (std::size_t i = 0; i < k; ++i) {
    if (divisor_orders[i] == 0 || group.order(i) % divisor_orders[i] != 0) {
      throw InvalidArgument("divisor tuple entry does not divide the factor order");
    }
  }

  // contexts[i] handles coordinates i..k-1.
  std::vector<TensorContext> contexts;
  contexts.reserve(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    contexts.emplace_back(std::vector<std::uint64_t>(divisor_orders.begin() + static_cast<std::ptrdiff_t>(i),
                                                     divisor_orders.end()));
  }

  TensorElem current = TensorElem::zero(&contexts[0]);
  std::vector<std::size_t> exps(k);
  for (std::size_t g = 0; g < element.size(); ++g) {
    if (sgn(element.coeffs()[g]) == 0) continue;
    auto tuple = group.tuple_of(g);
    for (std::size_t i = 0; i < k; ++i) exps[i] = tuple[i] % divisor_orders[i];
    current.add_monomial(exps, element.coeffs()[g]);
  }

  // Eliminate x_1, x_2, ... in turn: the norm from S = R[x_i]/Phi_{d_i} down to R is the
  // determinant of multiplication by the current element on the basis 1, x_i, ..., x_i^{phi-1}.
  for (std::size_t i = 0; i < k; ++i) {
    const TensorContext& full = contexts[i];
    const TensorContext* rest = &contexts[i + 1];
    const std::size_t deg = full.phis[0];
    const std::size_t stride = full.strides[0];
    std::vector<TensorElem> slices;
    slices.reserve(deg);
    for (std::size_t r = 0; r < deg; ++r) {
      std::vector<BigInt> part(current.coeffs().begin() + static_cast<std::ptrdiff_t>(r * stride),
                               current.coeffs().begin() + static_cast<std::ptrdiff_t>((r + 1) * stride));
      slices.emplace_back(rest, std::move(part));
    }
    if (deg == 1) {
      current = std::move(slices[0]);
      continue;
    }
    Matrix<TensorElem> mult(deg, deg, TensorElem::zero(rest));
    for (std::size_t col = 0; col < deg; ++col) {
      for (std::size_t s = 0; s < deg; ++s) {
        for (const auto& [row, r] : full.reductions[0][s + col]) {
          TensorElem term = slices[s];
          for (auto& v : term.coeffs()) v *= r;
          mult(row, col) = mult(row, col) + term;
        }
      }
    }
    current = berkowitz_determinant(mult, TensorElem::one(rest));
  }
  return current.coeffs()[0];
}

MeasureResult measure_by_determinant(const GroupRingElement& element, const MeasureOptions& options) {
  const GroupSpec& group = element.group();
  const std::size_t n = group.size(options.max_group_order);
  std::vector<std::vector<std::uint32_t>> tuples;
  tuples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tuples.push_back(group.tuple_of(i));
  Matrix<BigInt> d(n, n);
  std::vector<std::uint32_t> diff(group.rank());
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] = (tuples[g][i] + group.order(i) - tuples[h][i]) % group.order(i);
      }
      d(g, h) = element.coeffs()[group.index_of(diff)];
    }
  }
  BigInt det = n <= options.bareiss_max_order ? bareiss_determinant(std::move(d)) : modular_determinant(d);
  return make_result(std::move(det), group, MeasureMethod::determinant);
}

MeasureResult measure_by_determinant(const GroupSpec& group, const IntPolynomial& poly,
                                     const MeasureOptions& options) {
  return measure_by_determinant(reduce_mod_ideal(poly, group, options.max_group_order), options);
}

MeasureResult measure_by_resultants(const GroupRingElement& element, const MeasureOptions& options) {
  const GroupSpec& group = element.group();
  group.size(options.max_group_order);
  BigInt product = 1;
  std::vector<DivisorFactor> factors;
  for (auto& tuple : divisor_tuples(group)) {
    BigInt value = divisor_tuple_factor(element, tuple);
    product *= value;
    factors.push_back({std::move(tuple), std::move(value)});
  }
  MeasureResult r = make_result(std::move(product), group, MeasureMethod::resultant);
  r.factors = std::move(factors);
  return r;
}

MeasureResult measure_by_resultants(const GroupSpec& group, const IntPolynomial& poly,
                                    const MeasureOptions& options) {
  return measure_by_resultants(reduce_mod_ideal(poly, group, options.max_group_order), options);
}

std::optional<BigInt> measure_float_check(const GroupRingElement& element, unsigned precision_bits) {
  if (precision_bits < 64) throw InvalidArgument("ball precision must be at least 64 bits");
  auto prec = static_cast<mpfr_prec_t>(precision_bits);
  auto values = character_value_balls(element, prec);
  ComplexBall product{RealBall::from_integer(1, prec), RealBall(prec)};
  for (const auto& v : values) product = product * v;
  if (!product.im.contains_zero()) return std::nullopt;
  return product.re.unique_integer();
}

std::optional<BigInt> measure_float_check(const GroupSpec& group, const IntPolynomial& poly,
                                          unsigned precision_bits, const MeasureOptions& options) {
  return measure_float_check(reduce_mod_ideal(poly, group, options.max_group_order), precision_bits);
}

MeasureResult measure_by_ball(const GroupSpec& group, const IntPolynomial& poly, const MeasureOptions& options) {
  GroupRingElement element = reduce_mod_ideal(poly, group, options.max_group_order);
  for (unsigned bits = options.ball_start_bits; bits <= options.ball_max_bits; bits *= 2) {
    if (auto value = measure_float_check(element, bits)) {
      return make_result(std::move(*value), group, MeasureMethod::ball);
    }
  }
  throw ResourceLimit("ball arithmetic did not isolate an integer at " +
                      std::to_string(options.ball_max_bits) + " bits");
}

MeasureResult measure(const GroupSpec& group, const IntPolynomial& poly, MeasureMethod method,
                      const MeasureOptions& options) {
  switch (method) {
    case MeasureMethod::determinant: return measure_by_determinant(group, poly, options);
    case MeasureMethod::resultant: return measure_by_resultants(group, poly, options);
    case MeasureMethod::ball: return measure_by_ball(group, poly, options);
  }
  throw InvalidArgument("unknown measure method");
}

BigInt NormFactorization::product() const {
  BigInt p = 1;
  for (const auto& f : factors) p *= f.value;
  return p;
}

NormFactorization norm_factorization(const GroupSpec& group, const IntPolynomial& poly,
                                     const MeasureOptions& options) {
  auto structure = p_group_structure(group);
  if (!structure) throw InvalidArgument("norm factorization needs a p-group, got " + group.to_string());
  GroupRingElement element = reduce_mod_ideal(poly, group, options.max_group_order);
  NormFactorization out;
  out.structure = *structure;
  const std::size_t k = group.rank();
  std::vector<unsigned> defects(k, 0);
  while (true) {
    std::vector<std::uint64_t> orders(k);
    for (std::size_t i = 0; i < k; ++i) {
      orders[i] = 1;
      for (unsigned e = defects[i]; e < structure->exponents[i]; ++e) orders[i] *= structure->prime;
    }
    out.factors.push_back({defects, divisor_tuple_factor(element, orders)});
    std::size_t i = k;
    while (i-- > 0) {
      if (++defects[i] <= structure->exponents[i]) break;
      defects[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

BigInt cyclotomic_resultant_generic(std::uint64_t j, std::uint64_t k) {
  return abs(resultant_euclid(cyclotomic_polynomial(j), cyclotomic_polynomial(k)));
}

BigInt cyclotomic_resultant(std::uint64_t j, std::uint64_t k, bool verify) {
  if (k < 1 || j <= k) throw InvalidArgument("cyclotomic_resultant needs j > k >= 1");
  BigInt closed = 1;
  if (j % k == 0) {
    if (auto pp = prime_power(j / k)) closed = pow(from_u64(pp->first), euler_phi(k));
  }
  if (verify) {
    BigInt generic = cyclotomic_resultant_generic(j, k);
    if (generic != closed) {
      throw VerificationFailure("|Res(Phi_" + std::to_string(j) + ", Phi_" + std::to_string(k) +
                                ")|: closed form " + to_string(closed) + " but generic " + to_string(generic));
    }
  }
  return closed;
}

BigInt TwoAdicDecomposition::total() const {
  BigInt t = n0 * n1 * n2;
  for (const auto& v : n_factors) t *= v;
  return t;
}

TwoAdicDecomposition two_adic_decomposition(unsigned n, const IntPolynomial& f) {
  if (n < 3) throw InvalidArgument("two-adic decomposition needs n >= 3");
  if (n > 12) throw ResourceLimit("two-adic decomposition supports n <= 12");
  if (f.num_vars() != 1) throw InvalidArgument("two-adic decomposition needs a univariate polynomial");

  TwoAdicDecomposition out;
  out.n = n;
  const GaussianInteger i_unit(0, 1);
  const GaussianInteger i_powers[4] = {GaussianInteger(1), GaussianInteger(0, 1), GaussianInteger(-1),
                                       GaussianInteger(0, -1)};
  out.n0 = 0;
  out.n1 = 0;
  for (const auto& [e, c] : f.terms()) {
    out.n0 += c;
    out.n1 += (e[0] % 2 == 0) ? c : BigInt(-c);
    out.f_at_i = out.f_at_i + i_powers[e[0] % 4] * GaussianInteger(c);
  }
  out.n2 = out.f_at_i.norm();

  // R_j = prod over roots of y^m - i (m = 2^{j-2}) of f, i.e. the norm of f from
  // Z[i][y]/(y^m - i) to Z[i].
  for (unsigned j = 3; j <= n; ++j) {
    const std::size_t m = std::size_t{1} << (j - 2);
    std::vector<GaussianInteger> reduced(m);
    for (const auto& [e, c] : f.terms()) {
      std::size_t wraps = e[0] / m;
      reduced[e[0] % m] = reduced[e[0] % m] + i_powers[wraps % 4] * GaussianInteger(c);
    }
    Matrix<GaussianInteger> mult(m, m);
    for (std::size_t col = 0; col < m; ++col) {
      for (std::size_t s = 0; s < m; ++s) {
        if (s + col < m) {
          mult(s + col, col) = mult(s + col, col) + reduced[s];
        } else {
          mult(s + col - m, col) = mult(s + col - m, col) + i_unit * reduced[s];
        }
      }
    }
    GaussianInteger r = berkowitz_determinant(mult, GaussianInteger(1));
    out.n_factors.push_back(r.norm());
    out.r_factors.push_back(std::move(r));
  }

  GroupSpec cyclic(std::vector<std::uint32_t>{1U << n});
  GroupRingElement element = reduce_mod_ideal(f, cyclic, std::size_t{1} << n);
  auto check = [&](std::uint64_t d, const BigInt& expected, const std::string& label) {
    BigInt via_resultant = divisor_tuple_factor(element, {d});
    if (via_resultant != expected) {
      throw VerificationFailure(label + " = " + to_string(expected) + " but Res(f, Phi_" + std::to_string(d) +
                                ") = " + to_string(via_resultant));
    }
  };
  check(1, out.n0, "N_0");
  check(2, out.n1, "N_1");
  check(4, out.n2, "N_2");
  for (unsigned j = 3; j <= n; ++j) check(std::uint64_t{1} << j, out.n_factors[j - 3], "N_" + std::to_string(j));
  return out;
}

}  // namespace lindlehmer
