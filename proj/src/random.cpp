#include "lindlehmer/random.hpp"

#include "lindlehmer/errors.hpp"

namespace lindlehmer {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

GroupSpec random_p_group(Rng& rng, std::uint64_t p, std::size_t max_order) {
  if (max_order < p) throw InvalidArgument("max_order below p");
  std::vector<std::uint32_t> orders;
  std::uint64_t size = 1;
  // First factor always present; further factors with probability 1/2 while they fit.
  do {
    std::vector<std::uint64_t> choices;
    for (std::uint64_t q = p; size * q <= max_order; q *= p) choices.push_back(q);
    if (choices.empty()) break;
    const std::uint64_t q = choices[rng.below(choices.size())];
    orders.push_back(static_cast<std::uint32_t>(q));
    size *= q;
  } while (rng.below(2) == 0);
  return GroupSpec(std::move(orders));
}

GroupSpec random_group(Rng& rng, std::size_t max_order) {
  if (max_order < 2) throw InvalidArgument("max_order below 2");
  std::vector<std::uint32_t> orders;
  std::uint64_t size = 1;
  do {
    const std::uint64_t room = max_order / size;
    if (room < 2) break;
    const auto n = static_cast<std::uint64_t>(rng.uniform(2, static_cast<std::int64_t>(std::min<std::uint64_t>(room, 12))));
    orders.push_back(static_cast<std::uint32_t>(n));
    size *= n;
  } while (rng.below(2) == 0);
  return GroupSpec(std::move(orders));
}

IntPolynomial random_polynomial(Rng& rng, const GroupSpec& group, int bound, std::size_t terms) {
  const std::size_t k = group.rank();
  IntPolynomial poly(k);
  Exponents exps(k);
  for (std::size_t t = 0; t < terms; ++t) {
    for (std::size_t i = 0; i < k; ++i) exps[i] = static_cast<std::uint32_t>(rng.below(2 * group.order(i)));
    poly.add_term(exps, from_i64(rng.uniform(-bound, bound)));
  }
  return poly;
}

}  // namespace lindlehmer
