#include "lindlehmer/congruence.hpp"

#include "lindlehmer/errors.hpp"

namespace lindlehmer {

namespace {

PGroupStructure require_p_group(const GroupSpec& group) {
  auto structure = p_group_structure(group);
  if (!structure) throw InvalidArgument("group " + group.to_string() + " is not a p-group");
  return *structure;
}

}  // namespace

CongruenceReport check_congruence(const GroupSpec& group, const IntPolynomial& poly, bool strict,
                                  const MeasureOptions& options) {
  PGroupStructure structure = require_p_group(group);
  CongruenceReport report;
  report.modulus = structure.modulus();
  report.m_value = measure_by_determinant(group, poly, options).m_int;
  report.lhs_residue = mod_floor(report.m_value, report.modulus);
  report.rhs_residue = powm(poly.value_at_ones(), group.cardinality(), report.modulus);
  report.satisfied = report.lhs_residue == report.rhs_residue;
  if (strict && !report.satisfied) {
    throw VerificationFailure("congruence fails for " + poly.to_string() + " over " + group.to_string() +
                              ": M mod " + to_string(report.modulus) + " = " + to_string(report.lhs_residue) +
                              ", F(1)^|G| mod " + to_string(report.modulus) + " = " +
                              to_string(report.rhs_residue));
  }
  return report;
}

bool divisibility_when_p_divides(const GroupSpec& group, const IntPolynomial& poly, const MeasureOptions& options) {
  PGroupStructure structure = require_p_group(group);
  BigInt p = from_u64(structure.prime);
  BigInt f1 = poly.value_at_ones();
  if (!mpz_divisible_p(f1.get_mpz_t(), p.get_mpz_t())) {
    throw InvalidArgument("p does not divide F(1,...,1)");
  }
  BigInt divisor = group.cardinality() * structure.modulus();
  BigInt m = measure_by_determinant(group, poly, options).m_int;
  return mpz_divisible_p(m.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

std::set<std::uint64_t> allowed_residues(const GroupSpec& group) {
  PGroupStructure structure = require_p_group(group);
  BigInt modulus = structure.modulus();
  if (!modulus.fits_ulong_p() || modulus > 10'000'000) throw ResourceLimit("p^k too large to enumerate units");
  const std::uint64_t q = modulus.get_ui();
  std::set<std::uint64_t> out;
  for (std::uint64_t u = 1; u < q; ++u) {
    if (u % structure.prime == 0) continue;
    out.insert(powm(from_u64(u), group.cardinality(), modulus).get_ui());
  }
  return out;
}

}  // namespace lindlehmer
