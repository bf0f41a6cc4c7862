#include "lindlehmer/groups.hpp"

#include <charconv>
#include <numeric>

#include "lindlehmer/cyclotomic.hpp"
#include "lindlehmer/errors.hpp"

namespace lindlehmer {

GroupSpec::GroupSpec(std::vector<std::uint32_t> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InvalidArgument("group needs at least one cyclic factor");
  cardinality_ = 1;
  for (auto n : orders_) {
    if (n < 2) throw InvalidArgument("cyclic factor orders must be at least 2");
    if (n > kMaxFactorOrder) throw InvalidArgument("cyclic factor order exceeds limit");
    cardinality_ *= n;
  }
}

std::size_t GroupSpec::size(std::size_t cap) const {
  if (cmp(cardinality_, static_cast<unsigned long>(cap)) > 0) {
    throw ResourceLimit("group order " + lindlehmer::to_string(cardinality_) +
                        " exceeds the configured cap " + std::to_string(cap));
  }
  return cardinality_.get_ui();
}

std::uint64_t GroupSpec::exponent() const {
  std::uint64_t l = 1;
  for (auto n : orders_) {
    l = std::lcm(l, std::uint64_t{n});
    if (l > (std::uint64_t{1} << 40)) throw ResourceLimit("group exponent too large");
  }
  return l;
}

std::size_t GroupSpec::index_of(std::span<const std::uint32_t> tuple) const {
  if (tuple.size() != orders_.size()) throw InvalidArgument("tuple length does not match group rank");
  std::size_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (tuple[i] >= orders_[i]) throw InvalidArgument("tuple entry out of range");
    index = index * orders_[i] + tuple[i];
  }
  return index;
}

std::vector<std::uint32_t> GroupSpec::tuple_of(std::size_t index) const {
  std::vector<std::uint32_t> tuple(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    tuple[i] = static_cast<std::uint32_t>(index % orders_[i]);
    index /= orders_[i];
  }
  return tuple;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(orders_[i]);
  }
  return out;
}

BigInt PGroupStructure::modulus() const { return pow(BigInt(static_cast<unsigned long>(prime)), num_factors); }

GroupSpec make_group(std::span<const std::int64_t> orders) {
  std::vector<std::uint32_t> checked;
  checked.reserve(orders.size());
  for (auto n : orders) {
    if (n < 2) throw InvalidArgument("cyclic factor orders must be at least 2");
    if (n > kMaxFactorOrder) throw InvalidArgument("cyclic factor order exceeds limit");
    checked.push_back(static_cast<std::uint32_t>(n));
  }
  return GroupSpec(std::move(checked));
}

GroupSpec make_group(std::initializer_list<std::int64_t> orders) {
  return make_group(std::span<const std::int64_t>(orders.begin(), orders.size()));
}

GroupSpec parse_group(std::string_view text) {
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw InvalidArgument("invalid group order list '" + std::string(text) + "'");
    }
    orders.push_back(value);
    pos = comma + 1;
  }
  return make_group(orders);
}

std::optional<PGroupStructure> p_group_structure(const GroupSpec& group) {
  PGroupStructure out;
  for (auto n : group.orders()) {
    auto pp = prime_power(n);
    if (!pp) return std::nullopt;
    if (out.prime == 0) out.prime = pp->first;
    if (pp->first != out.prime) return std::nullopt;
    out.exponents.push_back(pp->second);
  }
  out.num_factors = group.rank();
  return out;
}

std::vector<CharacterIndex> enumerate_characters(const GroupSpec& group, std::size_t cap) {
  std::size_t count = group.size(cap);
  std::vector<CharacterIndex> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(group.tuple_of(i));
  return out;
}

}  // namespace lindlehmer
