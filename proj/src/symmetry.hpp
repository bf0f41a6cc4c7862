#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lindlehmer/groups.hpp"

namespace lindlehmer::detail {

/// Index tables for the measure-preserving maps used to reduce the search:
/// coordinate maps A (permutations of equal-order coordinates composed with
/// inversions x_i -> x_i^{-1}), translations by group elements, and sign.
///
/// The transform (A, h, s) sends e to t with t[A(g) + h] = s e[g].
class SymmetryMaps {
 public:
  explicit SymmetryMaps(const GroupSpec& group, std::size_t max_entries = std::size_t{1} << 24);

  std::size_t group_size() const noexcept { return n_; }
  std::size_t coordinate_map_count() const noexcept { return forward_.size(); }

  /// Index of A(g) for coordinate map `a` (map 0 is the identity).
  std::uint32_t forward(std::size_t a, std::size_t g) const { return forward_[a][g]; }

  /// Table T with t[q] = s e[T[q]] for the transform (A_a, h = -u).
  const std::uint16_t* pullback(std::size_t a, std::size_t u) const {
    return pullbacks_.data() + (a * n_ + u) * n_;
  }

  /// True iff no transform of e precedes e (larger-first lexicographic order).
  bool is_orbit_representative(const std::int32_t* e) const;

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> forward_;
  std::vector<std::uint16_t> pullbacks_;
};

}  // namespace lindlehmer::detail
