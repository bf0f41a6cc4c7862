#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lindlehmer {

struct ClaimCheck {
  std::string claim;
  std::string expected;
  std::string got;
  bool pass = false;
};

using ClaimSink = std::function<void(const ClaimCheck&)>;

struct VerifyOptions {
  /// Run one battery only (see verify_battery_names); empty runs all.
  std::string only;
  /// Overrides the per-battery trial count of the randomized batteries.
  std::optional<std::size_t> trials;
  /// Largest j for the cyclotomic resultant table.
  std::uint64_t max_index = 64;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// cyclic-2, cyclic-odd, elementary-2, two-groups, two-by-cyclic, three-by-cyclic, lemma-cong, divisibility,
/// resultant-table, three-path, vanishing, determinism.
const std::vector<std::string>& verify_battery_names();

/// Runs the selected batteries, reporting every assertion to `sink`. True iff all pass.
bool run_verify(const VerifyOptions& options, const ClaimSink& sink);

}  // namespace lindlehmer
