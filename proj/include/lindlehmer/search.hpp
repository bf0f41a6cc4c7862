#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lindlehmer/bigint.hpp"
#include "lindlehmer/groups.hpp"
#include "lindlehmer/poly.hpp"

namespace lindlehmer {

struct SearchConfig {
  explicit SearchConfig(GroupSpec g) : group(std::move(g)) {}

  GroupSpec group;
  /// Coefficients range over [-coeff_bound, coeff_bound].
  int coeff_bound = 1;
  unsigned thread_count = 1;
  /// Enumerate only orbit representatives under sign, translation, inversion and
  /// permutation of equal-order coordinates.
  bool symmetry_reduction = true;
  /// For p-groups, skip candidates with p | F(1,...,1); their |M| is 0 or >= |G| p^k.
  bool prune_p_divides_f1 = true;
  bool report_all_witnesses = true;
  std::size_t max_witnesses = 1000;
  /// Refuse boxes with more than this many candidates unless `force`.
  double budget = 1e9;
  bool force = false;
  std::size_t max_group_order = 64;
};

/// Odometer index interval [first, last) over the leading `prefix_length`
/// coefficients; every suffix of the remaining coefficients is included.
struct PrefixRange {
  std::size_t prefix_length = 0;
  std::uint64_t first = 0;
  std::uint64_t last = 1;
};

struct SearchReport {
  explicit SearchReport(SearchConfig c) : config(std::move(c)) {}

  SearchConfig config;
  /// Minimal |M| > 1 in the box; empty when every candidate has |M| <= 1.
  std::optional<BigInt> lambda_found;
  /// Representatives attaining lambda_found, in enumeration order, at most max_witnesses.
  std::vector<GroupRingElement> witnesses;
  std::uint64_t witness_count = 0;
  /// Candidates whose measure was computed.
  std::uint64_t explored = 0;
  /// Candidates skipped before measuring, by reason.
  std::map<std::string, std::uint64_t> pruned;
  bool exhaustive_in_box = false;
};

/// (2c+1)^{|G|}.
BigInt search_space_size(const SearchConfig& config);

SearchReport lambda_search(const SearchConfig& config);

/// Least element of the orbit in the order that compares coefficient arrays
/// lexicographically with larger values first (so constants normalise to positive).
GroupRingElement canonical_form(const GroupRingElement& element);

/// Splits the box into `parts` contiguous prefix ranges (parts = 0 means thread_count).
std::vector<PrefixRange> partition_space(const SearchConfig& config, std::size_t parts = 0);

/// Number of candidates covered by a range.
BigInt range_size(const SearchConfig& config, const PrefixRange& range);

struct WitnessCheck {
  bool ok = false;
  BigInt expected;
  BigInt determinant;
  BigInt resultant;
  std::string message;
};

/// |M_G(F)| = |expected| by the determinant path, cross-checked against the resultant path.
WitnessCheck verify_witness(const GroupSpec& group, const IntPolynomial& poly, const BigInt& expected);

}  // namespace lindlehmer
