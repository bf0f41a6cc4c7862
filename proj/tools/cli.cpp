#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>

#include "lindlehmer/congruence.hpp"
#include "lindlehmer/cyclotomic.hpp"
#include "lindlehmer/errors.hpp"
#include "lindlehmer/json_io.hpp"
#include "lindlehmer/measure.hpp"
#include "lindlehmer/random.hpp"
#include "lindlehmer/search.hpp"
#include "lindlehmer/verify.hpp"

namespace lindlehmer::cli {

namespace {

struct Globals {
  bool json = true;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::size_t max_group_order = 0;  // 0: per-command default
};

struct MeasureArgs {
  std::string group, poly, method = "determinant";
  bool factors = false, two_adic = false;
};

struct LambdaArgs {
  std::string group;
  int bound = 1;
  unsigned threads = 0;
  bool no_symmetry = false, no_prune = false, force = false;
  double budget = 1e9;
  std::size_t max_witnesses = 1000;
};

struct CongruenceArgs {
  std::string group, poly;
  std::size_t random = 0;
};

struct VerifyArgs {
  std::string only;
  std::size_t trials = 0;
  std::uint64_t max = 64;
};

struct WitnessArgs {
  std::string group, poly, expected;
};

int cmd_measure(const Globals& g, const MeasureArgs& a, std::ostream& out) {
  const GroupSpec group = parse_group(a.group);
  const IntPolynomial poly = parse_polynomial(a.poly, group.rank());
  MeasureOptions options;
  if (g.max_group_order) options.max_group_order = g.max_group_order;
  MeasureMethod method = parse_measure_method(a.method);
  if (a.factors && method == MeasureMethod::determinant) method = MeasureMethod::resultant;
  MeasureResult result = measure(group, poly, method, options);
  Json doc = measure_to_json(group, poly, result);
  if (a.factors) {
    if (p_group_structure(group)) doc["norm_factorization"] = norm_factorization_to_json(norm_factorization(group, poly, options));
  }
  if (a.two_adic) {
    const auto pp = group.rank() == 1 ? prime_power(group.order(0)) : std::nullopt;
    if (!pp || pp->first != 2) throw InvalidArgument("--two-adic needs a cyclic group of order 2^n");
    doc["two_adic"] = two_adic_to_json(two_adic_decomposition(pp->second, poly));
  }
  out << dump_line(doc) << '\n';
  return kOk;
}

int cmd_lambda(const Globals& g, const LambdaArgs& a, std::ostream& out) {
  SearchConfig config(parse_group(a.group));
  config.coeff_bound = a.bound;
  config.thread_count = a.threads ? a.threads : g.threads;
  config.symmetry_reduction = !a.no_symmetry;
  config.prune_p_divides_f1 = !a.no_prune;
  config.force = a.force;
  config.budget = a.budget;
  config.max_witnesses = a.max_witnesses;
  if (g.max_group_order) config.max_group_order = g.max_group_order;
  out << dump_line(search_report_to_json(lambda_search(config))) << '\n';
  return kOk;
}

int cmd_congruence(const Globals& g, const CongruenceArgs& a, std::ostream& out) {
  const GroupSpec group = parse_group(a.group);
  if (!p_group_structure(group)) throw InvalidArgument("congruence needs a p-group, got " + group.to_string());
  if (a.poly.empty() == (a.random == 0)) throw InvalidArgument("give exactly one of --poly and --random");
  MeasureOptions options;
  if (g.max_group_order) options.max_group_order = g.max_group_order;
  bool all = true;
  auto one = [&](const IntPolynomial& poly) {
    CongruenceReport r = check_congruence(group, poly, false, options);
    all = all && r.satisfied;
    out << dump_line(congruence_to_json(group, poly, r)) << '\n';
  };
  if (!a.poly.empty()) {
    one(parse_polynomial(a.poly, group.rank()));
  } else {
    Rng rng(g.seed);
    for (std::size_t t = 0; t < a.random; ++t) one(random_polynomial(rng, group, 4, 1 + rng.below(10)));
  }
  return all ? kOk : kVerificationFailure;
}

int cmd_resultant_table(std::uint64_t max, std::ostream& out) {
  if (max < 2) throw InvalidArgument("--max must be at least 2");
  bool all = true;
  for (std::uint64_t j = 2; j <= max; ++j) {
    for (std::uint64_t k = 1; k < j; ++k) {
      const BigInt closed = cyclotomic_resultant(j, k);
      const BigInt generic = cyclotomic_resultant_generic(j, k);
      Json row;
      row["j"] = j;
      row["k"] = k;
      row["closed_form"] = to_string(closed);
      row["generic"] = to_string(generic);
      row["pass"] = closed == generic;
      all = all && closed == generic;
      out << dump_line(row) << '\n';
    }
  }
  return all ? kOk : kVerificationFailure;
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  VerifyOptions options;
  options.only = a.only;
  if (a.trials) options.trials = a.trials;
  options.max_index = a.max;
  options.seed = g.seed;
  options.threads = g.threads;
  const bool ok = run_verify(options, [&](const ClaimCheck& c) {
    Json row;
    row["claim"] = c.claim;
    row["expected"] = c.expected;
    row["got"] = c.got;
    row["pass"] = c.pass;
    out << dump_line(row) << '\n';
  });
  return ok ? kOk : kVerificationFailure;
}

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  const GroupSpec group = parse_group(a.group);
  const IntPolynomial poly = parse_polynomial(a.poly, group.rank());
  const WitnessCheck check = verify_witness(group, poly, parse_bigint(a.expected));
  out << dump_line(witness_check_to_json(group, poly, check)) << '\n';
  return check.ok ? kOk : kVerificationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lind-Mahler measures and Lind-Lehmer constants of finite abelian groups", "lindlehmer"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "JSON output (the only format)");
  app.add_option("--threads", g.threads, "Worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--max-group-order", g.max_group_order, "Cap on |G|")->check(CLI::PositiveNumber);

  MeasureArgs ma;
  auto* measure_cmd = app.add_subcommand("measure", "Compute M_G(F) exactly");
  measure_cmd->add_option("--group", ma.group, "Cyclic factor orders, e.g. 2,4")->required();
  measure_cmd->add_option("--poly", ma.poly, "Polynomial; variables map to factors in order")->required();
  measure_cmd->add_option("--method", ma.method, "determinant, resultant or ball")->capture_default_str();
  measure_cmd->add_flag("--factors", ma.factors, "Include divisor-tuple and norm factors");
  measure_cmd->add_flag("--two-adic", ma.two_adic, "Include the N_j / R_j decomposition (cyclic 2-power groups)");

  LambdaArgs la;
  auto* lambda_cmd = app.add_subcommand("lambda", "Search a coefficient box for the least |M| > 1");
  lambda_cmd->add_option("--group", la.group, "Cyclic factor orders")->required();
  lambda_cmd->add_option("--bound", la.bound, "Coefficient bound c")->capture_default_str();
  lambda_cmd->add_option("--threads", la.threads, "Worker threads")->check(CLI::PositiveNumber);
  lambda_cmd->add_flag("--no-symmetry", la.no_symmetry, "Enumerate every array, not just orbit representatives");
  lambda_cmd->add_flag("--no-prune", la.no_prune, "Disable the p | F(1,...,1) prune");
  lambda_cmd->add_flag("--force", la.force, "Ignore the budget");
  lambda_cmd->add_option("--budget", la.budget, "Largest box size searched without --force")->capture_default_str();
  lambda_cmd->add_option("--max-witnesses", la.max_witnesses, "Witnesses listed in the report")->capture_default_str();

  CongruenceArgs ca;
  auto* cong_cmd = app.add_subcommand("congruence", "Check M = F(1,...,1)^|G| mod p^k");
  cong_cmd->add_option("--group", ca.group, "p-group factor orders")->required();
  cong_cmd->add_option("--poly", ca.poly, "Polynomial to check");
  cong_cmd->add_option("--random", ca.random, "Number of random polynomials to check");

  std::uint64_t table_max = 64;
  auto* table_cmd = app.add_subcommand("resultant-table", "Closed-form vs generic |Res(Phi_j, Phi_k)|");
  table_cmd->add_option("--max", table_max, "Largest j")->capture_default_str();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction battery");
  verify_cmd->add_option("--only", va.only, "Battery name")->check(CLI::IsMember(verify_battery_names()));
  verify_cmd->add_option("--trials", va.trials, "Trials for randomized batteries")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max", va.max, "Largest j for resultant-table")->capture_default_str();

  WitnessArgs wa;
  auto* witness_cmd = app.add_subcommand("witness", "Check |M_G(F)| = expected by two exact paths");
  witness_cmd->add_option("--group", wa.group, "Cyclic factor orders")->required();
  witness_cmd->add_option("--poly", wa.poly, "Polynomial")->required();
  witness_cmd->add_option("--expected", wa.expected, "Expected |M|")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*measure_cmd) return cmd_measure(g, ma, out);
    if (*lambda_cmd) return cmd_lambda(g, la, out);
    if (*cong_cmd) return cmd_congruence(g, ca, out);
    if (*table_cmd) return cmd_resultant_table(table_max, out);
    if (*verify_cmd) return cmd_verify(g, va, out);
    if (*witness_cmd) return cmd_witness(wa, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace lindlehmer::cli
