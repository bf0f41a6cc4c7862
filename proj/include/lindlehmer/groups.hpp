#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lindlehmer/bigint.hpp"

namespace lindlehmer {

/// Largest accepted order of a single cyclic factor.
inline constexpr std::int64_t kMaxFactorOrder = std::int64_t{1} << 24;

/// Default cap on |G| for every operation that materialises one value per group element.
inline constexpr std::size_t kDefaultMaxGroupOrder = 256;

/// G = Z_{n_1} x ... x Z_{n_k}, with factors kept in the order given.
///
/// Elements and characters are both addressed by tuples (e_1, ..., e_k) with
/// 0 <= e_i < n_i; the dense index of a tuple is its mixed-radix value with
/// the last coordinate varying fastest, so index order is lexicographic.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::uint32_t> orders);

  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
  std::uint32_t order(std::size_t i) const { return orders_.at(i); }
  std::size_t rank() const noexcept { return orders_.size(); }
  const BigInt& cardinality() const noexcept { return cardinality_; }

  /// |G| as a machine integer. Throws ResourceLimit when |G| exceeds `cap`.
  std::size_t size(std::size_t cap = kDefaultMaxGroupOrder) const;

  /// lcm of the factor orders, i.e. the exponent of G.
  std::uint64_t exponent() const;

  std::size_t index_of(std::span<const std::uint32_t> tuple) const;
  std::vector<std::uint32_t> tuple_of(std::size_t index) const;

  /// "2,4"-style rendering, the inverse of parse_group.
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::uint32_t> orders_;
  BigInt cardinality_;
};

/// G = Z_{p^{a_1}} x ... x Z_{p^{a_k}}.
struct PGroupStructure {
  std::uint64_t prime = 0;
  std::size_t num_factors = 0;
  std::vector<unsigned> exponents;

  /// p^k, the congruence modulus.
  BigInt modulus() const;

  friend bool operator==(const PGroupStructure&, const PGroupStructure&) = default;
};

using CharacterIndex = std::vector<std::uint32_t>;

GroupSpec make_group(std::span<const std::int64_t> orders);
GroupSpec make_group(std::initializer_list<std::int64_t> orders);

/// Parses a comma-separated order list such as "2,4".
GroupSpec parse_group(std::string_view text);

std::optional<PGroupStructure> p_group_structure(const GroupSpec& group);

/// All |G| characters in lexicographic order. Throws ResourceLimit above `cap`.
std::vector<CharacterIndex> enumerate_characters(const GroupSpec& group,
                                                 std::size_t cap = kDefaultMaxGroupOrder);

}  // namespace lindlehmer
