#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "lindlehmer/groups.hpp"
#include "lindlehmer/poly.hpp"

namespace lindlehmer {

/// Seeded generator with a portable bounded draw, so sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Z_{p^{a_1}} x ... x Z_{p^{a_k}} with 2 <= |G| <= max_order.
GroupSpec random_p_group(Rng& rng, std::uint64_t p, std::size_t max_order);

/// Any product of cyclic factors of order >= 2 with |G| <= max_order.
GroupSpec random_group(Rng& rng, std::size_t max_order);

/// Up to `terms` monomials with exponents below 2 n_i (so reduction is exercised)
/// and coefficients in [-bound, bound].
IntPolynomial random_polynomial(Rng& rng, const GroupSpec& group, int bound, std::size_t terms);

}  // namespace lindlehmer
