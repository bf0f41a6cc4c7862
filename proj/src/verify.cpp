#include "lindlehmer/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>

#include "lindlehmer/ball.hpp"
#include "lindlehmer/congruence.hpp"
#include "lindlehmer/errors.hpp"
#include "lindlehmer/json_io.hpp"
#include "lindlehmer/measure.hpp"
#include "lindlehmer/random.hpp"
#include "lindlehmer/search.hpp"

namespace lindlehmer {

namespace {

class Battery {
 public:
  Battery(const VerifyOptions& options, const ClaimSink& sink) : options_(options), sink_(sink) {}

  bool ok() const { return ok_; }

  void check(std::string claim, std::string expected, std::string got) {
    ClaimCheck c{std::move(claim), std::move(expected), std::move(got), false};
    c.pass = c.expected == c.got;
    emit(c);
  }

  void check_bool(std::string claim, bool pass, std::string got = {}) {
    emit({std::move(claim), "true", pass ? "true" : (got.empty() ? "false" : got), pass});
  }

  std::size_t trials(std::size_t fallback) const { return options_.trials.value_or(fallback); }
  const VerifyOptions& options() const { return options_; }

  // Runs `body`, turning library exceptions into a failed claim.
  template <class F>
  void guarded(const std::string& claim, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      emit({claim, "no error", std::string("error: ") + e.what(), false});
    }
  }

 private:
  void emit(const ClaimCheck& c) {
    ok_ = ok_ && c.pass;
    sink_(c);
  }

  const VerifyOptions& options_;
  const ClaimSink& sink_;
  bool ok_ = true;
};

std::string lambda_text(const SearchReport& r) { return r.lambda_found ? to_string(*r.lambda_found) : "none"; }

SearchReport search(const Battery& b, const char* group) {
  SearchConfig config(parse_group(group));
  config.thread_count = b.options().threads;
  return lambda_search(config);
}

void witness_claim(Battery& b, const std::string& claim, const char* group, const IntPolynomial& poly,
                   const BigInt& expected) {
  b.guarded(claim, [&] {
    WitnessCheck w = verify_witness(parse_group(group), poly, expected);
    b.check(claim, to_string(expected), w.ok ? to_string(abs(w.determinant)) : w.message);
  });
}

void witness_claim(Battery& b, const std::string& claim, const char* group, const char* poly, long expected) {
  const GroupSpec g = parse_group(group);
  witness_claim(b, claim, group, parse_polynomial(poly, g.rank()), BigInt(expected));
}

void search_claim(Battery& b, const std::string& claim, const char* group, long expected) {
  b.guarded(claim, [&] { b.check(claim, std::to_string(expected), lambda_text(search(b, group))); });
}

void cyclic_2(Battery& b) {
  for (const char* g : {"2", "4", "8", "16"}) {
    witness_claim(b, std::string("M[") + g + "](x^2+x+1)", g, "x^2+x+1", 3);
  }
  for (const char* g : {"2", "4"}) search_claim(b, std::string("lambda_search(Z") + g + ", c=1)", g, 3);
}

void cyclic_odd(Battery& b) {
  for (const char* g : {"3", "5", "7"}) {
    witness_claim(b, std::string("M[") + g + "](x+1)", g, "x+1", 2);
    search_claim(b, std::string("lambda_search(Z") + g + ", c=1)", g, 2);
  }
}

void elementary_2(Battery& b) {
  for (const char* g : {"2,2", "2,2,2", "2,2,2,2"}) {
    const GroupSpec group = parse_group(g);
    const long expected = static_cast<long>(group.size()) - 1;
    witness_claim(b, std::string("trivial bound witness over ") + g, g, trivial_bound_poly(group), BigInt(expected));
    search_claim(b, std::string("lambda_search(") + g + ", c=1)", g, expected);
  }
}

void two_groups(Battery& b) {
  search_claim(b, "lambda_search(2,4, c=1)", "2,4", 7);
  for (const char* g : {"4,4", "2,2,4"}) {
    const GroupSpec group = parse_group(g);
    witness_claim(b, std::string("trivial bound witness over ") + g, g, trivial_bound_poly(group), BigInt(15));
    b.guarded(std::string("allowed residues over ") + g, [&] {
      auto residues = allowed_residues(group);
      b.check(std::string("allowed residues over ") + g, "[1]", Json(std::vector<std::uint64_t>(residues.begin(), residues.end())).dump());
    });
    b.guarded(std::string("lambda_search(") + g + ", c=1)", [&] {
      SearchReport r = search(b, g);
      b.check(std::string("lambda_search(") + g + ", c=1)", "15", lambda_text(r));
      // Every in-box value is = 1 mod 2^k, so the signed witness values must be too.
      const BigInt modulus = p_group_structure(group)->modulus();
      bool all = !r.witnesses.empty();
      for (const auto& w : r.witnesses) {
        all = all && mod_floor(measure_by_determinant(w).m_int, modulus) == 1;
      }
      b.check_bool(std::string("search witnesses = 1 mod 2^k over ") + g, all);
    });
  }
}

void two_by_cyclic(Battery& b) {
  const IntPolynomial f = parse_polynomial("y^2+y+1", 2);
  for (unsigned n = 3; n <= 5; ++n) {
    const std::string g = "2," + std::to_string(1U << n);
    witness_claim(b, "M[" + g + "](y^2+y+1)", g.c_str(), f, BigInt(9));
  }
  Rng rng(b.options().seed);
  const GroupSpec g28 = parse_group("2,8");
  const std::size_t n = b.trials(200);
  std::size_t good = 0, tried = 0;
  b.guarded("random odd F(1,1) over 2,8 gives M = 1 mod 4", [&] {
    while (tried < n) {
      IntPolynomial poly = random_polynomial(rng, g28, 2, 1 + rng.below(12));
      if (mpz_odd_p(poly.value_at_ones().get_mpz_t()) == 0) continue;
      ++tried;
      if (mod_floor(measure_by_determinant(g28, poly).m_int, BigInt(4)) == 1) ++good;
    }
    b.check("random odd F(1,1) over 2,8 gives M = 1 mod 4", std::to_string(n), std::to_string(good));
  });
  // F does not involve x, so the measure over Z2 x Z_{2^n} is the square of the cyclic one.
  const IntPolynomial univariate = parse_polynomial("x^2+x+1", 1);
  for (unsigned m = 3; m <= 5; ++m) {
    const std::string claim = "two-adic decomposition squared, n=" + std::to_string(m);
    b.guarded(claim, [&] {
      TwoAdicDecomposition d = two_adic_decomposition(m, univariate);
      bool norms = true;
      for (std::size_t t = 0; t < d.r_factors.size(); ++t) norms = norms && d.r_factors[t].norm() == d.n_factors[t];
      b.check_bool("N_j = |R_j|^2, n=" + std::to_string(m), norms);
      BigInt total = d.total();
      b.check(claim, "9", to_string(total * total));
    });
  }
}

void three_by_cyclic(Battery& b) {
  for (unsigned n = 1; n <= 3; ++n) {
    std::uint32_t q = 1;
    for (unsigned t = 0; t < n; ++t) q *= 3;
    const std::string g = "3," + std::to_string(q);
    witness_claim(b, "M[" + g + "](y+1)", g.c_str(), "y+1", 8);
    b.guarded("allowed residues over " + g, [&] {
      auto residues = allowed_residues(parse_group(g));
      b.check("allowed residues over " + g, "[1,8]",
              Json(std::vector<std::uint64_t>(residues.begin(), residues.end())).dump());
    });
  }
  search_claim(b, "lambda_search(3,3, c=1)", "3,3", 8);
}

void lemma_cong(Battery& b) {
  Rng rng(b.options().seed);
  const std::size_t n = b.trials(500);
  for (std::size_t t = 0; t < n; ++t) {
    const std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[rng.below(3)];
    const GroupSpec group = random_p_group(rng, p, 64);
    const IntPolynomial poly = random_polynomial(rng, group, 4, 1 + rng.below(10));
    const std::string claim = "congruence #" + std::to_string(t) + " over " + group.to_string();
    b.guarded(claim, [&] {
      CongruenceReport r = check_congruence(group, poly);
      b.check(claim, to_string(r.rhs_residue), to_string(r.lhs_residue));
    });
  }
}

void divisibility(Battery& b) {
  Rng rng(b.options().seed);
  const std::size_t n = b.trials(100);
  for (std::size_t t = 0; t < n; ++t) {
    const std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[rng.below(3)];
    const GroupSpec group = random_p_group(rng, p, 64);
    IntPolynomial poly = random_polynomial(rng, group, 4, 1 + rng.below(10));
    // Shift the constant term so that p | F(1,...,1).
    const BigInt r = mod_floor(poly.value_at_ones(), from_u64(p));
    poly.add_term(Exponents(group.rank(), 0), -r);
    const std::string claim = "divisibility #" + std::to_string(t) + " over " + group.to_string();
    b.guarded(claim, [&] { b.check_bool(claim, divisibility_when_p_divides(group, poly)); });
  }
}

void resultant_table(Battery& b) {
  const std::uint64_t max = b.options().max_index;
  for (std::uint64_t j = 2; j <= max; ++j) {
    for (std::uint64_t k = 1; k < j; ++k) {
      const std::string claim = "|Res(Phi_" + std::to_string(j) + ", Phi_" + std::to_string(k) + ")|";
      b.guarded(claim, [&] {
        b.check(claim, to_string(cyclotomic_resultant(j, k)), to_string(cyclotomic_resultant_generic(j, k)));
      });
    }
  }
}

void three_path(Battery& b) {
  Rng rng(b.options().seed);
  const std::size_t n = b.trials(300);
  for (std::size_t t = 0; t < n; ++t) {
    const GroupSpec group = random_group(rng, 32);
    const IntPolynomial poly = random_polynomial(rng, group, 3, 1 + rng.below(12));
    const std::string claim = "three paths #" + std::to_string(t) + " over " + group.to_string();
    b.guarded(claim, [&] {
      const BigInt det = measure_by_determinant(group, poly).m_int;
      const BigInt res = measure_by_resultants(group, poly).m_int;
      const BigInt ball = measure_by_ball(group, poly).m_int;
      const std::string d = to_string(det);
      b.check(claim, d + "," + d + "," + d, d + "," + to_string(res) + "," + to_string(ball));
    });
  }
}

// Random element of the ideal: sum of (x_i^{n_i} - 1) h_i.
IntPolynomial random_ideal_member(Rng& rng, const GroupSpec& group) {
  const std::size_t k = group.rank();
  IntPolynomial out(k);
  for (std::size_t i = 0; i < k; ++i) {
    Exponents e(k, 0);
    e[i] = group.order(i);
    IntPolynomial gen = IntPolynomial::monomial(e, BigInt(1)) - IntPolynomial::constant(k, BigInt(1));
    out += gen * random_polynomial(rng, group, 3, 1 + rng.below(5));
  }
  return out;
}

void vanishing(Battery& b) {
  Rng rng(b.options().seed);
  const std::size_t n = b.trials(200);
  constexpr mpfr_prec_t prec = 128;
  for (std::size_t t = 0; t < n; ++t) {
    const GroupSpec group = random_group(rng, 32);
    const IntPolynomial member = random_ideal_member(rng, group);
    const std::string claim = "ideal member #" + std::to_string(t) + " over " + group.to_string();
    b.guarded(claim, [&] {
      const GroupRingElement reduced = reduce_mod_ideal(member, group);
      bool vanishes = true;
      for (const auto& v : evaluate_characters_exact(reduced)) vanishes = vanishes && v == CyclotomicInteger(v.order(), {});
      b.check_bool(claim + " reduces to zero", reduced.is_zero() && vanishes);
    });
  }
  for (std::size_t t = 0; t < n; ++t) {
    const GroupSpec group = random_group(rng, 32);
    IntPolynomial poly = random_polynomial(rng, group, 3, 1 + rng.below(8));
    const std::string claim = "non-member #" + std::to_string(t) + " over " + group.to_string();
    b.guarded(claim, [&] {
      GroupRingElement reduced = reduce_mod_ideal(poly, group);
      if (reduced.is_zero()) {
        poly += IntPolynomial::constant(group.rank(), BigInt(1));
        reduced = reduce_mod_ideal(poly, group);
      }
      double scale = 0;
      for (const auto& c : reduced.coeffs()) scale += std::abs(c.get_d());
      bool nonvanishing = false;
      for (const auto& v : character_value_balls(reduced, prec)) {
        nonvanishing = nonvanishing || v.magnitude_lower() > 1e-6 * scale;
      }
      const bool recovered = coefficient_recovery(evaluate_characters_exact(reduced), group) == reduced.coeffs();
      b.check_bool(claim + " has a nonzero character value", nonvanishing && recovered);
    });
  }
}

void determinism(Battery& b) {
  for (const char* g : {"2,2", "2,2,2", "2,2,2,2", "2,4", "4,4", "2,2,4"}) {
    const std::string claim = std::string("reports agree for 1, 2, 8 threads over ") + g;
    b.guarded(claim, [&] {
      std::vector<std::string> dumps;
      for (unsigned threads : {1U, 2U, 8U}) {
        SearchConfig config(parse_group(g));
        config.thread_count = threads;
        dumps.push_back(search_report_to_json(lambda_search(config)).dump());
      }
      b.check_bool(claim, dumps[0] == dumps[1] && dumps[0] == dumps[2]);
    });
  }
}

using BatteryFn = void (*)(Battery&);

const std::vector<std::pair<std::string, BatteryFn>>& batteries() {
  static const std::vector<std::pair<std::string, BatteryFn>> list = {
      {"cyclic-2", cyclic_2},
      {"cyclic-odd", cyclic_odd},
      {"elementary-2", elementary_2},
      {"two-groups", two_groups},
      {"two-by-cyclic", two_by_cyclic},
      {"three-by-cyclic", three_by_cyclic},
      {"lemma-cong", lemma_cong},
      {"divisibility", divisibility},
      {"resultant-table", resultant_table},
      {"three-path", three_path},
      {"vanishing", vanishing},
      {"determinism", determinism},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& verify_battery_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : batteries()) out.push_back(name);
    return out;
  }();
  return names;
}

bool run_verify(const VerifyOptions& options, const ClaimSink& sink) {
  if (!options.only.empty()) {
    const auto& names = verify_battery_names();
    if (std::find(names.begin(), names.end(), options.only) == names.end()) {
      throw InvalidArgument("unknown verification battery: " + options.only);
    }
  }
  if (options.max_index < 2) throw InvalidArgument("resultant table needs max >= 2");
  Battery battery(options, sink);
  for (const auto& [name, fn] : batteries()) {
    if (options.only.empty() || options.only == name) fn(battery);
  }
  return battery.ok();
}

}  // namespace lindlehmer
