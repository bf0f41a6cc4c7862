#pragma once

#include <string>

#include <json.hpp>

#include "lindlehmer/congruence.hpp"
#include "lindlehmer/measure.hpp"
#include "lindlehmer/poly.hpp"
#include "lindlehmer/search.hpp"

namespace lindlehmer {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

/// [{"exponents": [...], "coeff": "decimal"}, ...] in lexicographic exponent order.
Json poly_to_json(const IntPolynomial& poly);
IntPolynomial poly_from_json(const Json& json, std::size_t num_vars);

Json measure_to_json(const GroupSpec& group, const IntPolynomial& poly, const MeasureResult& result);
Json norm_factorization_to_json(const NormFactorization& factorization);
Json two_adic_to_json(const TwoAdicDecomposition& decomposition);
Json search_report_to_json(const SearchReport& report);
Json congruence_to_json(const GroupSpec& group, const IntPolynomial& poly, const CongruenceReport& report);
Json witness_check_to_json(const GroupSpec& group, const IntPolynomial& poly, const WitnessCheck& check);

/// Compact single-line rendering.
std::string dump_line(const Json& json);

}  // namespace lindlehmer
