#include <doctest.h>

#include "lindlehmer/congruence.hpp"
#include "lindlehmer/errors.hpp"
#include "lindlehmer/random.hpp"

using namespace lindlehmer;

namespace {

IntPolynomial P(const char* text, std::size_t nv) { return parse_polynomial(text, nv); }

}  // namespace

TEST_CASE("check_congruence examples") {
  auto a = check_congruence(make_group({2, 4}), P("y^2+y+1", 2));
  CHECK(a.m_value == 9);
  CHECK(a.modulus == 4);
  CHECK(a.lhs_residue == 1);
  CHECK(a.rhs_residue == 1);  // 3^8 = 6561 = 1 mod 4
  CHECK(a.satisfied);

  auto b = check_congruence(make_group({9}), P("x+1", 1));
  CHECK(b.m_value == 2);
  CHECK(b.modulus == 3);
  CHECK(b.lhs_residue == 2);
  CHECK(b.rhs_residue == 2);

  auto c = check_congruence(make_group({3, 9}), P("y+1", 2));
  CHECK(c.m_value == 8);
  CHECK(c.modulus == 9);
  CHECK(c.lhs_residue == 8);
  CHECK(c.rhs_residue == 8);  // 2^27 mod 9

  CHECK_THROWS_AS(check_congruence(make_group({2, 3}), P("x", 2)), InvalidArgument);
}

TEST_CASE("congruence holds on random p-groups") {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[rng.below(3)];
    GroupSpec g = random_p_group(rng, p, 64);
    auto f = random_polynomial(rng, g, 4, 1 + rng.below(10));
    auto r = check_congruence(g, f, true);
    CHECK(r.satisfied);
    CHECK(r.rhs_residue == powm(f.value_at_ones(), g.cardinality(), r.modulus));
    if (mpz_divisible_ui_p(f.value_at_ones().get_mpz_t(), p) == 0) {
      CHECK(allowed_residues(g).count(r.lhs_residue.get_ui()) == 1);
    }
  }
}

TEST_CASE("divisibility when p divides F(1)") {
  CHECK(divisibility_when_p_divides(make_group({2, 4}), P("x+y", 2)));
  CHECK(measure_by_determinant(make_group({2, 4}), P("x+y", 2)).m_int % 32 == 0);
  CHECK(divisibility_when_p_divides(make_group({3}), P("x+2", 1)));
  CHECK(measure_by_determinant(make_group({3}), P("x+2", 1)).m_int == 9);
  CHECK(divisibility_when_p_divides(make_group({2}), P("x+1", 1)));
  CHECK_THROWS_AS(divisibility_when_p_divides(make_group({2}), P("x+2", 1)), InvalidArgument);
  CHECK_THROWS_AS(divisibility_when_p_divides(make_group({6}), P("x+5", 1)), InvalidArgument);
}

TEST_CASE("allowed residues") {
  CHECK(allowed_residues(make_group({2, 4})) == std::set<std::uint64_t>{1});
  CHECK(allowed_residues(make_group({3, 9})) == std::set<std::uint64_t>{1, 8});
  CHECK(allowed_residues(make_group({3, 3})) == std::set<std::uint64_t>{1, 8});
  CHECK(allowed_residues(make_group({5})) == std::set<std::uint64_t>{1, 2, 3, 4});
  CHECK_THROWS_AS(allowed_residues(make_group({2, 3})), InvalidArgument);
}

TEST_CASE("allowed residues match a brute-force unit scan") {
  for (auto orders : {std::vector<std::int64_t>{2, 2, 2}, {4, 8}, {3, 27}, {5, 5}, {7}, {9, 9}}) {
    GroupSpec g = make_group(orders);
    auto s = *p_group_structure(g);
    const std::uint64_t m = s.modulus().get_ui();
    const std::uint64_t n = g.size(1 << 20);
    std::set<std::uint64_t> want;
    for (std::uint64_t u = 1; u < m; ++u) {
      if (u % s.prime == 0) continue;
      std::uint64_t v = 1;
      for (std::uint64_t e = 0; e < n; ++e) v = v * u % m;
      want.insert(v);
    }
    CHECK(allowed_residues(g) == want);
  }
}

TEST_CASE("integers = +-1 mod 9 with |m| > 1 are at least 8") {
  for (long m = -1000; m <= 1000; ++m) {
    const long r = ((m % 9) + 9) % 9;
    if (std::labs(m) > 1 && (r == 1 || r == 8)) CHECK(std::labs(m) >= 8);
  }
}
