#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lindlehmer/bigint.hpp"
#include "lindlehmer/cyclotomic.hpp"
#include "lindlehmer/groups.hpp"

namespace lindlehmer {

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Z. Terms are kept in lexicographic
/// order of exponent tuples and never store a zero coefficient.
class IntPolynomial {
 public:
  using TermMap = std::map<Exponents, BigInt>;

  explicit IntPolynomial(std::size_t num_vars = 1);

  static IntPolynomial constant(std::size_t num_vars, const BigInt& value);
  /// x_{index+1}, i.e. `index` is 0-based.
  static IntPolynomial variable(std::size_t num_vars, std::size_t index);
  static IntPolynomial monomial(Exponents exponents, const BigInt& coeff);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponents& exponents, const BigInt& coeff);
  BigInt coefficient(const Exponents& exponents) const;

  /// F(1, ..., 1).
  BigInt value_at_ones() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial pow(std::uint32_t exponent) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form using x,y,z for up to three variables and x1..xk otherwise.
  std::string to_string() const;

 private:
  void require_same_vars(const IntPolynomial& other) const;

  std::size_t num_vars_;
  TermMap terms_;
};

/// Parses the polynomial grammar: integers, variables x y z or x1..x9, + - * ^,
/// and parentheses. Unary minus binds looser than ^. Throws ParseError.
IntPolynomial parse_polynomial(std::string_view text, std::size_t num_vars);

/// An element of Z[G] = Z[x_1..x_k] / (x_i^{n_i} - 1), dense in the group's index order.
class GroupRingElement {
 public:
  GroupRingElement(GroupSpec group, std::vector<BigInt> coeffs);
  static GroupRingElement zero(const GroupSpec& group, std::size_t cap = kDefaultMaxGroupOrder);

  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  bool is_zero() const;
  BigInt value_at_ones() const;
  IntPolynomial to_polynomial() const;

  GroupRingElement operator+(const GroupRingElement& other) const;
  GroupRingElement operator*(const GroupRingElement& other) const;

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  GroupSpec group_;
  std::vector<BigInt> coeffs_;
};

GroupRingElement reduce_mod_ideal(const IntPolynomial& poly, const GroupSpec& group,
                                  std::size_t cap = kDefaultMaxGroupOrder);

/// True iff poly lies in the ideal (x_i^{n_i} - 1), equivalently iff it
/// vanishes at every character of the group.
bool is_zero_mod_ideal(const IntPolynomial& poly, const GroupSpec& group,
                       std::size_t cap = kDefaultMaxGroupOrder);

/// -1 + prod_i (1 + x_i + ... + x_i^{n_i - 1}); its measure has absolute value |G| - 1.
IntPolynomial trivial_bound_poly(const GroupSpec& group, std::size_t cap = kDefaultMaxGroupOrder);

/// Exact character values in Z[zeta_L], L the group exponent, in character order.
std::vector<CyclotomicInteger> evaluate_characters_exact(const GroupRingElement& element);

/// Inverts evaluate_characters_exact: a(T) = (1/|G|) sum_j F(chi_j) chi_j(-T).
/// Throws NonIntegralResult if the transform does not produce integers.
std::vector<BigInt> coefficient_recovery(const std::vector<CyclotomicInteger>& values,
                                         const GroupSpec& group);

}  // namespace lindlehmer
