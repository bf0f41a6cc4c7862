#include "lindlehmer/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <thread>

#include "lindlehmer/errors.hpp"
#include "lindlehmer/measure.hpp"
#include "small_kernel.hpp"
#include "symmetry.hpp"

namespace lindlehmer {

using detail::i128;
using detail::u128;

namespace {

constexpr std::size_t kSearchChunks = 256;
constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

void validate(const SearchConfig& config) {
  if (config.coeff_bound < 1) throw InvalidArgument("coefficient bound must be at least 1");
  if (config.coeff_bound > 1000) throw InvalidArgument("coefficient bound too large");
  if (config.thread_count < 1) throw InvalidArgument("thread count must be at least 1");
  config.group.size(config.max_group_order);
}

std::uint64_t radix(const SearchConfig& config) { return 2 * static_cast<std::uint64_t>(config.coeff_bound) + 1; }

BigInt upow(std::uint64_t base, std::size_t e) { return pow(from_u64(base), e); }

// Larger values first.
template <class T>
bool precedes(const std::vector<T>& a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

GroupRingElement to_element(const GroupSpec& group, const std::int32_t* e, std::size_t n) {
  std::vector<BigInt> coeffs(n);
  for (std::size_t g = 0; g < n; ++g) coeffs[g] = e[g];
  return GroupRingElement(group, std::move(coeffs));
}

struct ChunkResult {
  std::optional<BigInt> best;
  std::vector<GroupRingElement> witnesses;
  std::uint64_t witness_count = 0;
  std::uint64_t explored = 0;
  std::uint64_t pruned_divisibility = 0;
  std::uint64_t pruned_symmetry = 0;
};

class Searcher {
 public:
  explicit Searcher(const SearchConfig& config)
      : config_(config),
        n_(config.group.size(config.max_group_order)),
        kernel_(config.group, config.max_group_order) {
    if (config.symmetry_reduction) symmetry_.emplace(config.group);
    if (auto structure = p_group_structure(config.group)) prime_ = structure->prime;
  }

  bool prunes() const { return config_.prune_p_divides_f1 && prime_ != 0; }

  ChunkResult run_chunk(const PrefixRange& range) {
    ChunkResult out;
    const std::int32_t c = config_.coeff_bound;
    const std::uint64_t base = radix(config_);
    const std::size_t l = range.prefix_length;
    std::vector<std::int32_t> e(n_, -c);
    u128 local_bound = detail::kNoBound;
    const bool prune = prunes();

    for (std::uint64_t prefix = range.first; prefix < range.last; ++prefix) {
      std::uint64_t rest = prefix;
      for (std::size_t i = l; i-- > 0;) {
        e[i] = static_cast<std::int32_t>(rest % base) - c;
        rest /= base;
      }
      std::fill(e.begin() + static_cast<std::ptrdiff_t>(l), e.end(), -c);
      std::int64_t sum = 0;
      for (std::int32_t x : e) sum += x;

      while (true) {
        visit(e.data(), sum, prune, local_bound, out);
        // Odometer step over the suffix, last index fastest.
        bool wrapped = true;
        for (std::size_t i = n_; i > l;) {
          --i;
          if (e[i] < c) {
            ++e[i];
            ++sum;
            wrapped = false;
            break;
          }
          e[i] = -c;
          sum -= 2 * c;
        }
        if (wrapped) break;
      }
    }
    return out;
  }

  std::atomic<std::uint64_t> global_best{kUnbounded};

 private:
  void visit(const std::int32_t* e, std::int64_t sum, bool prune, u128& local_bound, ChunkResult& out) {
    if (prune && sum % static_cast<std::int64_t>(prime_) == 0) {
      ++out.pruned_divisibility;
      return;
    }
    if (symmetry_ && !symmetry_->is_orbit_representative(e)) {
      ++out.pruned_symmetry;
      return;
    }
    ++out.explored;

    u128 bound = local_bound;
    const std::uint64_t g = global_best.load(std::memory_order_relaxed);
    if (g != kUnbounded) bound = std::min<u128>(bound, g);

    auto outcome = kernel_.evaluate(e, bound);
    BigInt value;
    switch (outcome.status) {
      case detail::SmallKernel::Status::zero:
      case detail::SmallKernel::Status::exceeded:
        return;
      case detail::SmallKernel::Status::value: {
        const u128 mag = outcome.value < 0 ? -static_cast<u128>(outcome.value) : static_cast<u128>(outcome.value);
        if (mag <= 1) return;
        value = from_int128(outcome.value < 0 ? -outcome.value : outcome.value);
        break;
      }
      case detail::SmallKernel::Status::overflow: {
        value = abs(measure_by_determinant(to_element(config_.group, e, n_)).m_int);
        if (value <= 1) return;
        if (bound != detail::kNoBound && value > from_int128(static_cast<i128>(bound))) return;
        break;
      }
    }
    record(e, value, local_bound, out);
  }

  void record(const std::int32_t* e, const BigInt& value, u128& local_bound, ChunkResult& out) {
    if (out.best && value > *out.best) return;
    if (!out.best || value < *out.best) {
      out.best = value;
      out.witnesses.clear();
      out.witness_count = 0;
      if (fits_i64(value)) {
        const auto v = static_cast<std::uint64_t>(to_i64(value));
        local_bound = v;
        std::uint64_t current = global_best.load(std::memory_order_relaxed);
        while (v < current && !global_best.compare_exchange_weak(current, v, std::memory_order_relaxed)) {
        }
      }
    }
    ++out.witness_count;
    if (out.witnesses.size() < config_.max_witnesses) out.witnesses.push_back(to_element(config_.group, e, n_));
  }

  const SearchConfig& config_;
  std::size_t n_;
  detail::SmallKernel kernel_;
  std::optional<detail::SymmetryMaps> symmetry_;
  std::uint64_t prime_ = 0;
};

SearchReport run_search(const SearchConfig& config) {
  Searcher searcher(config);
  const auto ranges = partition_space(config, kSearchChunks);
  std::vector<ChunkResult> results(ranges.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&]() {
    try {
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < ranges.size();) {
        results[i] = searcher.run_chunk(ranges[i]);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  const unsigned threads = std::min<std::size_t>(config.thread_count, ranges.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  SearchReport report(config);
  std::uint64_t divisibility = 0, symmetry = 0;
  for (const auto& r : results) {
    report.explored += r.explored;
    divisibility += r.pruned_divisibility;
    symmetry += r.pruned_symmetry;
    if (r.best && (!report.lambda_found || *r.best < *report.lambda_found)) report.lambda_found = r.best;
  }
  for (auto& r : results) {
    if (!r.best || *r.best != *report.lambda_found) continue;
    report.witness_count += r.witness_count;
    for (auto& w : r.witnesses) {
      if (report.witnesses.size() < config.max_witnesses) report.witnesses.push_back(std::move(w));
    }
  }
  if (!config.report_all_witnesses && report.witnesses.size() > 1) report.witnesses.erase(report.witnesses.begin() + 1, report.witnesses.end());
  if (searcher.prunes()) report.pruned["p_divides_f1"] = divisibility;
  if (config.symmetry_reduction) report.pruned["symmetry"] = symmetry;
  report.exhaustive_in_box = true;
  return report;
}

}  // namespace

BigInt search_space_size(const SearchConfig& config) {
  if (config.coeff_bound < 1) throw InvalidArgument("coefficient bound must be at least 1");
  return pow(from_u64(radix(config)), config.group.cardinality().get_ui());
}

std::vector<PrefixRange> partition_space(const SearchConfig& config, std::size_t parts) {
  validate(config);
  if (parts == 0) parts = config.thread_count;
  const std::size_t n = config.group.size(config.max_group_order);
  const std::uint64_t base = radix(config);
  std::size_t length = 0;
  std::uint64_t count = 1;
  while (count < parts && length < n) {
    if (count > std::numeric_limits<std::uint64_t>::max() / base) break;
    count *= base;
    ++length;
  }
  parts = std::min<std::uint64_t>(parts, count);
  std::vector<PrefixRange> ranges;
  ranges.reserve(parts);
  for (std::size_t i = 0; i < parts; ++i) {
    PrefixRange r;
    r.prefix_length = length;
    r.first = count / parts * i + std::min<std::uint64_t>(i, count % parts);
    r.last = r.first + count / parts + (i < count % parts ? 1 : 0);
    ranges.push_back(r);
  }
  return ranges;
}

BigInt range_size(const SearchConfig& config, const PrefixRange& range) {
  const std::size_t n = config.group.size(config.max_group_order);
  if (range.prefix_length > n || range.last < range.first) throw InvalidArgument("malformed prefix range");
  return from_u64(range.last - range.first) * upow(radix(config), n - range.prefix_length);
}

SearchReport lambda_search(const SearchConfig& config) {
  validate(config);
  const BigInt size = search_space_size(config);
  if (!config.force && mpz_get_d(size.get_mpz_t()) > config.budget) {
    throw ResourceLimit("search space of " + to_string(size) + " candidates exceeds the budget");
  }

  SearchReport report = run_search(config);

  // The prune only drops |M| = 0 or |G| p^k | M, so it is harmless below that threshold.
  if (auto it = report.pruned.find("p_divides_f1"); it != report.pruned.end() && it->second > 0) {
    const auto structure = p_group_structure(config.group);
    const BigInt threshold = config.group.cardinality() * structure->modulus();
    if (!report.lambda_found || *report.lambda_found >= threshold) {
      SearchConfig unpruned = config;
      unpruned.prune_p_divides_f1 = false;
      SearchReport rerun = run_search(unpruned);
      rerun.config = config;
      report = std::move(rerun);
    }
  }

  const auto structure = p_group_structure(config.group);
  for (const auto& w : report.witnesses) {
    const IntPolynomial poly = w.to_polynomial();
    WitnessCheck check = verify_witness(config.group, poly, *report.lambda_found);
    if (!check.ok) throw VerificationFailure("search witness failed recheck: " + check.message);
    if (structure) {
      const BigInt modulus = structure->modulus();
      const BigInt lhs = mod_floor(check.determinant, modulus);
      const BigInt rhs = powm(w.value_at_ones(), config.group.cardinality(), modulus);
      if (lhs != rhs) throw VerificationFailure("search witness violates the p-group congruence");
    }
  }
  return report;
}

GroupRingElement canonical_form(const GroupRingElement& element) {
  const GroupSpec& group = element.group();
  const std::size_t n = element.size();
  detail::SymmetryMaps maps(group);
  std::vector<BigInt> best = element.coeffs();
  std::vector<BigInt> t(n);
  for (std::size_t a = 0; a < maps.coordinate_map_count(); ++a) {
    for (std::size_t u = 0; u < n; ++u) {
      const std::uint16_t* table = maps.pullback(a, u);
      for (int s : {1, -1}) {
        for (std::size_t q = 0; q < n; ++q) t[q] = s * element.coeffs()[table[q]];
        if (precedes(t, best)) best = t;
      }
    }
  }
  return GroupRingElement(group, std::move(best));
}

WitnessCheck verify_witness(const GroupSpec& group, const IntPolynomial& poly, const BigInt& expected) {
  WitnessCheck check;
  check.expected = expected;
  check.determinant = measure_by_determinant(group, poly).m_int;
  check.resultant = measure_by_resultants(group, poly).m_int;
  const BigInt want = abs(expected);
  const bool det_ok = abs(check.determinant) == want;
  const bool paths_agree = check.determinant == check.resultant;
  check.ok = det_ok && paths_agree;
  if (!det_ok) {
    check.message = "expected |M| = " + to_string(want) + ", determinant gives " + to_string(check.determinant) +
                    ", resultant gives " + to_string(check.resultant);
  } else if (!paths_agree) {
    check.message = "determinant gives " + to_string(check.determinant) + " but resultant gives " +
                    to_string(check.resultant);
  }
  return check;
}

}  // namespace lindlehmer
