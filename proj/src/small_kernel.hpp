#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lindlehmer/groups.hpp"

namespace lindlehmer::detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline constexpr u128 kNoBound = ~u128{0};

/// Machine-integer measure for small coefficient arrays. Characters are grouped
/// into Galois orbits; each orbit contributes the norm from Q(zeta_d) of the
/// value at one representative, computed as the determinant of multiplication
/// on the power basis of Z[x]/Phi_d.
class SmallKernel {
 public:
  enum class Status { zero, value, exceeded, overflow };

  struct Outcome {
    Status status = Status::value;
    i128 value = 0;
  };

  explicit SmallKernel(const GroupSpec& group, std::size_t cap = kDefaultMaxGroupOrder);

  /// Product of the orbit norms. Stops with `exceeded` once the partial product
  /// has absolute value above `bound`, and with `overflow` when 128 bits do not suffice.
  Outcome evaluate(const std::int32_t* coeffs, u128 bound = kNoBound) const;

  std::size_t orbit_count() const noexcept { return orbits_.size(); }
  std::size_t group_size() const noexcept { return n_; }

 private:
  struct Orbit {
    std::uint64_t order = 1;
    unsigned phi = 1;
    std::size_t size = 1;
    /// n x phi: power-basis coordinates of chi(g).
    std::vector<std::int64_t> table;
    /// d x phi: coordinates of x^r mod Phi_d.
    std::vector<std::int64_t> powers;
    std::int64_t a0 = 0;
    std::int64_t a1 = 0;
  };

  bool norm(const Orbit& orbit, const std::int64_t* v, i128& out) const;

  std::size_t n_;
  std::vector<Orbit> orbits_;
};

}  // namespace lindlehmer::detail
