#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindlehmer/bigint.hpp"
#include "lindlehmer/gaussian.hpp"
#include "lindlehmer/groups.hpp"
#include "lindlehmer/poly.hpp"

namespace lindlehmer {

enum class MeasureMethod { determinant, resultant, ball };

std::string to_string(MeasureMethod method);
MeasureMethod parse_measure_method(std::string_view name);

struct MeasureOptions {
  std::size_t max_group_order = kDefaultMaxGroupOrder;
  /// Fraction-free elimination up to this order, CRT reconstruction above.
  std::size_t bareiss_max_order = 64;
  unsigned ball_start_bits = 128;
  unsigned ball_max_bits = 4096;
};

/// Sub-product of M_G(F) over the characters whose i-th component has exact order divisors[i].
struct DivisorFactor {
  std::vector<std::uint64_t> divisors;
  BigInt value;
};

struct MeasureResult {
  BigInt m_int;
  /// ln|M| / |G|; empty when M = 0.
  std::optional<double> log_measure;
  MeasureMethod method = MeasureMethod::determinant;
  /// Filled by the resultant path only, in lexicographic order of divisor tuples.
  std::vector<DivisorFactor> factors;
};

/// det(c_{g-h}) for the reduced coefficients c of F.
MeasureResult measure_by_determinant(const GroupRingElement& element, const MeasureOptions& options = {});
MeasureResult measure_by_determinant(const GroupSpec& group, const IntPolynomial& poly,
                                     const MeasureOptions& options = {});

/// Product over divisor tuples of Res_{x_k}(... Res_{x_1}(Phi_{d_1}(x_1), F) ..., Phi_{d_k}(x_k)).
MeasureResult measure_by_resultants(const GroupRingElement& element, const MeasureOptions& options = {});
MeasureResult measure_by_resultants(const GroupSpec& group, const IntPolynomial& poly,
                                    const MeasureOptions& options = {});

/// The divisor-tuple factor of measure_by_resultants on its own.
BigInt divisor_tuple_factor(const GroupRingElement& element, const std::vector<std::uint64_t>& divisors);

/// Product of character values in ball arithmetic at `precision_bits`. Returns the
/// unique integer in the final ball, or nothing if the ball is too wide to decide.
std::optional<BigInt> measure_float_check(const GroupSpec& group, const IntPolynomial& poly,
                                          unsigned precision_bits, const MeasureOptions& options = {});
std::optional<BigInt> measure_float_check(const GroupRingElement& element, unsigned precision_bits);

/// measure_float_check on the precision ladder start, 2*start, ... up to the cap.
MeasureResult measure_by_ball(const GroupSpec& group, const IntPolynomial& poly,
                              const MeasureOptions& options = {});

MeasureResult measure(const GroupSpec& group, const IntPolynomial& poly, MeasureMethod method,
                      const MeasureOptions& options = {});

struct NormFactor {
  /// (t_1, ..., t_k): the factor collects characters of order p^{a_i - t_i} in coordinate i.
  std::vector<unsigned> defects;
  BigInt value;
};

struct NormFactorization {
  PGroupStructure structure;
  std::vector<NormFactor> factors;

  BigInt product() const;
};

NormFactorization norm_factorization(const GroupSpec& group, const IntPolynomial& poly,
                                     const MeasureOptions& options = {});

/// |Res(Phi_j, Phi_k)| for j > k >= 1 by the closed form: q^phi(k) if j = k q^a for a
/// prime q, else 1. With `verify`, recomputes it generically and throws on mismatch.
BigInt cyclotomic_resultant(std::uint64_t j, std::uint64_t k, bool verify = false);

/// The same |Res(Phi_j, Phi_k)| from the Euclidean resultant of the two polynomials.
BigInt cyclotomic_resultant_generic(std::uint64_t j, std::uint64_t k);

/// M_{Z_{2^n}}(f) = N_0 N_1 N_2 prod_{j>=3} N_j with N_j = |R_j|^2, R_j in Z[i].
struct TwoAdicDecomposition {
  unsigned n = 0;
  BigInt n0;                              // f(1)
  BigInt n1;                              // f(-1)
  GaussianInteger f_at_i;                 // f(i)
  BigInt n2;                              // |f(i)|^2
  std::vector<GaussianInteger> r_factors;  // R_3 .. R_n
  std::vector<BigInt> n_factors;           // N_3 .. N_n

  BigInt total() const;
};

/// Requires n >= 3 and a univariate f. Cross-checks every N_j against the resultant path.
TwoAdicDecomposition two_adic_decomposition(unsigned n, const IntPolynomial& f);

}  // namespace lindlehmer
