#include "symmetry.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "lindlehmer/errors.hpp"

namespace lindlehmer::detail {

SymmetryMaps::SymmetryMaps(const GroupSpec& group, std::size_t max_entries) : n_(group.size(UINT16_MAX)) {
  const std::size_t k = group.rank();
  const auto& orders = group.orders();

  // Coordinates grouped by order; permutations act within each class.
  std::map<std::uint32_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < k; ++i) classes[orders[i]].push_back(i);

  std::vector<std::vector<std::size_t>> perms{std::vector<std::size_t>(k)};
  std::iota(perms[0].begin(), perms[0].end(), 0);
  for (const auto& [order, coords] : classes) {
    std::vector<std::vector<std::size_t>> next;
    std::vector<std::size_t> images = coords;
    do {
      for (const auto& base : perms) {
        auto p = base;
        for (std::size_t t = 0; t < coords.size(); ++t) p[coords[t]] = images[t];
        next.push_back(std::move(p));
      }
      if (next.size() * n_ * n_ > max_entries) throw ResourceLimit("too many symmetry maps for this group");
    } while (std::next_permutation(images.begin(), images.end()));
    perms = std::move(next);
  }
  std::vector<std::size_t> invertible;
  for (std::size_t i = 0; i < k; ++i) {
    if (orders[i] > 2) invertible.push_back(i);
  }
  const std::size_t masks = std::size_t{1} << invertible.size();
  if (perms.size() * masks * n_ * n_ > max_entries) throw ResourceLimit("too many symmetry maps for this group");

  std::vector<std::vector<std::uint32_t>> tuples(n_);
  for (std::size_t g = 0; g < n_; ++g) tuples[g] = group.tuple_of(g);

  std::vector<std::uint32_t> image(k);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    for (const auto& perm : perms) {
      std::vector<std::uint32_t> fwd(n_);
      for (std::size_t g = 0; g < n_; ++g) {
        for (std::size_t i = 0; i < k; ++i) {
          std::uint32_t v = tuples[g][i];
          bool inverted = false;
          for (std::size_t b = 0; b < invertible.size(); ++b) {
            if (invertible[b] == i && ((mask >> b) & 1U)) inverted = true;
          }
          if (inverted) v = (orders[i] - v) % orders[i];
          image[perm[i]] = v;
        }
        fwd[g] = static_cast<std::uint32_t>(group.index_of(image));
      }
      forward_.push_back(std::move(fwd));
    }
  }

  // add[a][b] = index of a + b.
  std::vector<std::uint32_t> add(n_ * n_);
  std::vector<std::uint32_t> sum(k);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      for (std::size_t i = 0; i < k; ++i) sum[i] = (tuples[a][i] + tuples[b][i]) % orders[i];
      add[a * n_ + b] = static_cast<std::uint32_t>(group.index_of(sum));
    }
  }

  // t[q] = s e[A^{-1}(q - h)] with h = -u, i.e. e[A^{-1}(q + u)].
  pullbacks_.resize(forward_.size() * n_ * n_);
  std::vector<std::uint32_t> inverse(n_);
  for (std::size_t a = 0; a < forward_.size(); ++a) {
    for (std::size_t g = 0; g < n_; ++g) inverse[forward_[a][g]] = static_cast<std::uint32_t>(g);
    for (std::size_t u = 0; u < n_; ++u) {
      std::uint16_t* table = pullbacks_.data() + (a * n_ + u) * n_;
      for (std::size_t q = 0; q < n_; ++q) table[q] = static_cast<std::uint16_t>(inverse[add[q * n_ + u]]);
    }
  }
}

bool SymmetryMaps::is_orbit_representative(const std::int32_t* e) const {
  std::int32_t m = 0;
  for (std::size_t g = 0; g < n_; ++g) m = std::max(m, std::abs(e[g]));
  if (m == 0) return true;
  if (e[0] != m) return false;
  // A transform can only tie at position 0 if it moves some g0 with s e[g0] = m there.
  for (std::size_t a = 0; a < forward_.size(); ++a) {
    for (std::size_t g0 = 0; g0 < n_; ++g0) {
      if (std::abs(e[g0]) != m) continue;
      const std::int32_t s = e[g0] > 0 ? 1 : -1;
      if (a == 0 && g0 == 0) continue;
      const std::uint16_t* table = pullback(a, forward_[a][g0]);
      for (std::size_t q = 1; q < n_; ++q) {
        std::int32_t t = s * e[table[q]];
        if (t != e[q]) {
          if (t > e[q]) return false;
          break;
        }
      }
    }
  }
  return true;
}

}  // namespace lindlehmer::detail
