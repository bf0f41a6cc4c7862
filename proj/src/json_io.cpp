#include "lindlehmer/json_io.hpp"

#include "lindlehmer/errors.hpp"

namespace lindlehmer {

Json poly_to_json(const IntPolynomial& poly) {
  Json out = Json::array();
  for (const auto& [exps, coeff] : poly.terms()) {
    Json term;
    term["exponents"] = exps;
    term["coeff"] = to_string(coeff);
    out.push_back(std::move(term));
  }
  return out;
}

IntPolynomial poly_from_json(const Json& json, std::size_t num_vars) {
  if (!json.is_array()) throw InvalidArgument("polynomial JSON must be an array of terms");
  IntPolynomial poly(num_vars);
  for (const auto& term : json) {
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff")) {
      throw InvalidArgument("polynomial term needs exponents and coeff");
    }
    Exponents exps;
    for (const auto& e : term.at("exponents")) {
      if (!e.is_number_unsigned()) throw InvalidArgument("exponents must be non-negative integers");
      exps.push_back(e.get<std::uint32_t>());
    }
    if (exps.size() != num_vars) throw InvalidArgument("exponent tuple has wrong length");
    const auto& c = term.at("coeff");
    BigInt coeff = c.is_string() ? parse_bigint(c.get<std::string>()) : from_i64(c.get<std::int64_t>());
    poly.add_term(exps, coeff);
  }
  return poly;
}

Json measure_to_json(const GroupSpec& group, const IntPolynomial& poly, const MeasureResult& result) {
  Json out;
  out["group"] = group.to_string();
  out["poly"] = poly_to_json(poly);
  out["M"] = to_string(result.m_int);
  out["log_measure"] = result.log_measure ? Json(*result.log_measure) : Json(nullptr);
  if (!result.factors.empty()) {
    Json factors = Json::array();
    for (const auto& f : result.factors) {
      Json entry;
      entry["divisors"] = f.divisors;
      entry["value"] = to_string(f.value);
      factors.push_back(std::move(entry));
    }
    out["factors"] = std::move(factors);
  }
  out["method"] = to_string(result.method);
  return out;
}

Json norm_factorization_to_json(const NormFactorization& factorization) {
  Json out;
  out["prime"] = factorization.structure.prime;
  out["exponents"] = factorization.structure.exponents;
  Json factors = Json::array();
  for (const auto& f : factorization.factors) {
    Json entry;
    entry["defects"] = f.defects;
    entry["value"] = to_string(f.value);
    factors.push_back(std::move(entry));
  }
  out["factors"] = std::move(factors);
  out["product"] = to_string(factorization.product());
  return out;
}

Json two_adic_to_json(const TwoAdicDecomposition& d) {
  Json out;
  out["n"] = d.n;
  out["N0"] = to_string(d.n0);
  out["N1"] = to_string(d.n1);
  out["f(i)"] = d.f_at_i.to_string();
  out["N2"] = to_string(d.n2);
  Json js = Json::array();
  for (std::size_t t = 0; t < d.r_factors.size(); ++t) {
    Json entry;
    entry["j"] = t + 3;
    entry["R"] = d.r_factors[t].to_string();
    entry["N"] = to_string(d.n_factors[t]);
    js.push_back(std::move(entry));
  }
  out["higher"] = std::move(js);
  out["total"] = to_string(d.total());
  return out;
}

Json search_report_to_json(const SearchReport& report) {
  Json out;
  out["group"] = report.config.group.to_string();
  out["bound"] = report.config.coeff_bound;
  out["lambda"] = report.lambda_found ? Json(to_string(*report.lambda_found)) : Json(nullptr);
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(poly_to_json(w.to_polynomial()));
  out["witnesses"] = std::move(witnesses);
  out["witness_count"] = report.witness_count;
  out["explored"] = report.explored;
  Json pruned = Json::object();
  for (const auto& [reason, count] : report.pruned) pruned[reason] = count;
  out["pruned"] = std::move(pruned);
  out["exhaustive_in_box"] = report.exhaustive_in_box;
  return out;
}

Json congruence_to_json(const GroupSpec& group, const IntPolynomial& poly, const CongruenceReport& report) {
  Json out;
  out["group"] = group.to_string();
  out["poly"] = poly_to_json(poly);
  out["modulus"] = to_string(report.modulus);
  out["M"] = to_string(report.m_value);
  out["lhs_residue"] = to_string(report.lhs_residue);
  out["rhs_residue"] = to_string(report.rhs_residue);
  out["satisfied"] = report.satisfied;
  return out;
}

Json witness_check_to_json(const GroupSpec& group, const IntPolynomial& poly, const WitnessCheck& check) {
  Json out;
  out["group"] = group.to_string();
  out["poly"] = poly_to_json(poly);
  out["expected"] = to_string(check.expected);
  out["determinant"] = to_string(check.determinant);
  out["resultant"] = to_string(check.resultant);
  out["ok"] = check.ok;
  if (!check.message.empty()) out["message"] = check.message;
  return out;
}

std::string dump_line(const Json& json) { return json.dump(); }

}  // namespace lindlehmer
