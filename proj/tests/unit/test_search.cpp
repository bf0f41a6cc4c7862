#include <doctest.h>

#include <algorithm>
#include <set>

#include "lindlehmer/errors.hpp"
#include "lindlehmer/json_io.hpp"
#include "lindlehmer/measure.hpp"
#include "lindlehmer/random.hpp"
#include "lindlehmer/search.hpp"
#include "small_kernel.hpp"
#include "symmetry.hpp"

using namespace lindlehmer;

namespace {

SearchReport run(const char* group, unsigned threads = 1, bool symmetry = true, bool prune = true) {
  SearchConfig c(parse_group(group));
  c.thread_count = threads;
  c.symmetry_reduction = symmetry;
  c.prune_p_divides_f1 = prune;
  return lambda_search(c);
}

std::string lambda(const SearchReport& r) { return r.lambda_found ? to_string(*r.lambda_found) : "none"; }

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("lambda_search examples") {
  CHECK(lambda(run("2,2")) == "3");
  CHECK(lambda(run("2,4")) == "7");
  CHECK(lambda(run("3,3")) == "8");
  CHECK(lambda(run("3")) == "2");
  auto z4 = run("4");
  CHECK(lambda(z4) == "3");
  const auto target = reduce_mod_ideal(parse_polynomial("x^2+x+1", 1), make_group({4}));
  CHECK(std::find(z4.witnesses.begin(), z4.witnesses.end(), target) != z4.witnesses.end());
  CHECK(z4.exhaustive_in_box);
}

TEST_CASE("Z2 has no |M| > 1 in the unit box") {
  auto r = run("2");
  CHECK_FALSE(r.lambda_found);
  CHECK(r.witnesses.empty());
  CHECK(r.exhaustive_in_box);
}

TEST_CASE("in-box minimality against brute force on Z2 x Z2") {
  GroupSpec g = make_group({2, 2});
  BigInt best = 0;
  std::vector<std::vector<BigInt>> attaining;
  for (int code = 0; code < 81; ++code) {
    std::vector<BigInt> c(4);
    for (int i = 0, v = code; i < 4; ++i, v /= 3) c[3 - i] = v % 3 - 1;
    BigInt m = abs(measure_by_determinant(GroupRingElement(g, c)).m_int);
    if (m <= 1) continue;
    if (best == 0 || m < best) {
      best = m;
      attaining.clear();
    }
    if (m == best) attaining.push_back(c);
  }
  for (bool symmetry : {true, false}) {
    for (bool prune : {true, false}) {
      auto r = run("2,2", 1, symmetry, prune);
      REQUIRE(r.lambda_found);
      CHECK(*r.lambda_found == best);
      if (!symmetry) {
        CHECK(r.witness_count == attaining.size());
        CHECK(r.explored + (prune ? r.pruned.at("p_divides_f1") : 0) == 81);
      }
    }
  }
  // Every orbit representative found is the canonical form of some brute-force witness.
  std::set<std::vector<BigInt>> canon;
  for (const auto& c : attaining) canon.insert(canonical_form(GroupRingElement(g, c)).coeffs());
  auto r = run("2,2");
  CHECK(r.witness_count == canon.size());
  for (const auto& w : r.witnesses) CHECK(canon.count(w.coeffs()) == 1);
}

TEST_CASE("prune and symmetry safety") {
  for (const char* g : {"2,4", "2,2,2", "3,3", "4", "8", "5", "7", "2,2"}) {
    const auto base = lambda(run(g));
    CHECK(lambda(run(g, 1, true, false)) == base);
    CHECK(lambda(run(g, 1, false, true)) == base);
  }
}

TEST_CASE("symmetry safety on the |G| = 16 groups" * doctest::timeout(300)) {
  for (const char* g : {"2,2,2,2", "4,4", "2,2,4"}) CHECK(lambda(run(g, 4, false, true)) == "15");
}

TEST_CASE("determinism across thread counts") {
  for (const char* g : {"2,2", "2,2,2", "2,4", "3,3"}) {
    const auto one = search_report_to_json(run(g, 1)).dump();
    for (unsigned t : {2U, 3U, 8U}) CHECK(search_report_to_json(run(g, t)).dump() == one);
  }
}

TEST_CASE("every witness is rechecked") {
  auto r = run("2,2,2");
  REQUIRE(r.lambda_found);
  for (const auto& w : r.witnesses) {
    CHECK(abs(measure_by_determinant(w).m_int) == *r.lambda_found);
    CHECK(abs(measure_by_resultants(w).m_int) == *r.lambda_found);
  }
}

TEST_CASE("budget, caps and argument checks") {
  SearchConfig c(make_group({2, 2, 2, 2}));
  c.coeff_bound = 2;
  CHECK(search_space_size(c) == pow(BigInt(5), 16));
  CHECK_THROWS_AS(lambda_search(c), ResourceLimit);
  c.budget = 1e12;
  c.coeff_bound = 0;
  CHECK_THROWS_AS(lambda_search(c), InvalidArgument);
  SearchConfig big(make_group({8, 16}));
  CHECK_THROWS_AS(lambda_search(big), ResourceLimit);
  SearchConfig threads(make_group({2}));
  threads.thread_count = 0;
  CHECK_THROWS_AS(lambda_search(threads), InvalidArgument);
}

TEST_CASE("witness list is capped but counted") {
  SearchConfig c(make_group({2, 2, 2}));
  c.symmetry_reduction = false;
  c.max_witnesses = 3;
  auto r = lambda_search(c);
  CHECK(r.witnesses.size() == 3);
  CHECK(r.witness_count > 3);
}

TEST_CASE("partition_space") {
  SearchConfig a(make_group({2, 2}));
  a.thread_count = 3;
  auto ra = partition_space(a);
  CHECK(ra.size() == 3);
  BigInt total = 0;
  for (const auto& r : ra) {
    CHECK(range_size(a, r) == 27);
    total += range_size(a, r);
  }
  CHECK(total == 81);

  SearchConfig b(make_group({2, 4}));
  auto rb = partition_space(b);
  REQUIRE(rb.size() == 1);
  CHECK(range_size(b, rb[0]) == 6561);

  Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    SearchConfig c(random_group(rng, 12));
    c.coeff_bound = 1 + static_cast<int>(rng.below(3));
    auto parts = partition_space(c, 1 + rng.below(300));
    BigInt sum = 0;
    std::uint64_t expect_first = 0;
    for (const auto& r : parts) {
      CHECK(r.first == expect_first);
      CHECK(r.last > r.first);
      expect_first = r.last;
      sum += range_size(c, r);
    }
    CHECK(sum == search_space_size(c));
  }
}

TEST_CASE("canonical_form examples") {
  GroupSpec z2 = make_group({2});
  CHECK(canonical_form(GroupRingElement(z2, ints({-1, 0}))).coeffs() == ints({1, 0}));
  CHECK(canonical_form(GroupRingElement(z2, ints({0, -1}))).coeffs() == ints({1, 0}));
  GroupSpec v4 = make_group({2, 2});
  auto x = reduce_mod_ideal(parse_polynomial("x", 2), v4);
  auto y = reduce_mod_ideal(parse_polynomial("y", 2), v4);
  CHECK(canonical_form(x) == canonical_form(y));
  // Inversion on Z4: 1 + x and 1 + x^3 are the same orbit.
  GroupSpec z4 = make_group({4});
  CHECK(canonical_form(GroupRingElement(z4, ints({1, 1, 0, 0}))) ==
        canonical_form(GroupRingElement(z4, ints({1, 0, 0, 1}))));
}

TEST_CASE("canonical_form preserves |M| and is idempotent") {
  Rng rng(52);
  GroupSpec g = make_group({2, 4});
  for (int t = 0; t < 100; ++t) {
    auto e = reduce_mod_ideal(random_polynomial(rng, g, 3, 1 + rng.below(10)), g);
    auto c = canonical_form(e);
    CHECK(abs(measure_by_determinant(c).m_int) == abs(measure_by_determinant(e).m_int));
    CHECK(canonical_form(c) == c);
  }
}

TEST_CASE("orbit representative test matches canonical_form") {
  Rng rng(53);
  for (const char* name : {"2,2", "4", "2,4", "3,3", "2,2,2"}) {
    GroupSpec g = parse_group(name);
    detail::SymmetryMaps maps(g);
    for (int t = 0; t < 200; ++t) {
      std::vector<std::int32_t> e(g.size());
      for (auto& v : e) v = static_cast<std::int32_t>(rng.uniform(-2, 2));
      std::vector<BigInt> big(e.begin(), e.end());
      GroupRingElement elt(g, big);
      CHECK(maps.is_orbit_representative(e.data()) == (canonical_form(elt) == elt));
    }
  }
}

TEST_CASE("small kernel matches the exact determinant") {
  Rng rng(54);
  for (int t = 0; t < 300; ++t) {
    GroupSpec g = random_group(rng, 40);
    detail::SmallKernel kernel(g);
    std::vector<std::int32_t> e(g.size());
    for (auto& v : e) v = static_cast<std::int32_t>(rng.uniform(-3, 3));
    std::vector<BigInt> big(e.begin(), e.end());
    const BigInt want = measure_by_determinant(GroupRingElement(g, big)).m_int;
    auto out = kernel.evaluate(e.data());
    if (out.status == detail::SmallKernel::Status::overflow) continue;
    if (want == 0) {
      CHECK(out.status == detail::SmallKernel::Status::zero);
    } else {
      REQUIRE(out.status == detail::SmallKernel::Status::value);
      CHECK(from_int128(out.value) == want);
    }
  }
}

TEST_CASE("small kernel early exit") {
  GroupSpec g = make_group({2, 4});
  detail::SmallKernel kernel(g);
  std::vector<std::int32_t> e{1, 1, 1, 1, 1, 1, 1, 0};
  auto full = kernel.evaluate(e.data());
  REQUIRE(full.status == detail::SmallKernel::Status::value);
  const auto mag = static_cast<detail::u128>(full.value < 0 ? -full.value : full.value);
  CHECK(kernel.evaluate(e.data(), mag).status == detail::SmallKernel::Status::value);
  CHECK(kernel.evaluate(e.data(), mag - 1).status == detail::SmallKernel::Status::exceeded);
}

TEST_CASE("verify_witness") {
  auto a = verify_witness(make_group({2, 16}), parse_polynomial("y^2+y+1", 2), BigInt(9));
  CHECK(a.ok);
  CHECK(verify_witness(make_group({3, 27}), parse_polynomial("y+1", 2), BigInt(8)).ok);
  GroupSpec g44 = make_group({4, 4});
  auto t = verify_witness(g44, trivial_bound_poly(g44), BigInt(15));
  CHECK(t.ok);
  CHECK(t.determinant == t.resultant);
  auto bad = verify_witness(make_group({4}), parse_polynomial("x^2+x+1", 1), BigInt(5));
  CHECK_FALSE(bad.ok);
  CHECK(bad.message.find("3") != std::string::npos);
  CHECK(bad.message.find("5") != std::string::npos);
}
