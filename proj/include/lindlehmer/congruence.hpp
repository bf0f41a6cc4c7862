#pragma once

#include <cstdint>
#include <set>

#include "lindlehmer/bigint.hpp"
#include "lindlehmer/groups.hpp"
#include "lindlehmer/measure.hpp"
#include "lindlehmer/poly.hpp"

namespace lindlehmer {

/// Both sides of M_G(F) = F(1,...,1)^{|G|} (mod p^k) for a p-group of rank k.
struct CongruenceReport {
  BigInt modulus;
  BigInt m_value;
  BigInt lhs_residue;
  BigInt rhs_residue;
  bool satisfied = false;
};

/// With `strict`, an unsatisfied congruence throws VerificationFailure.
CongruenceReport check_congruence(const GroupSpec& group, const IntPolynomial& poly, bool strict = false,
                                  const MeasureOptions& options = {});

/// For p | F(1,...,1): whether |G| p^k divides M_G(F). Rejects inputs with p not dividing F(1,...,1).
bool divisibility_when_p_divides(const GroupSpec& group, const IntPolynomial& poly,
                                 const MeasureOptions& options = {});

/// { u^{|G|} mod p^k : gcd(u, p) = 1 }, enumerated directly.
std::set<std::uint64_t> allowed_residues(const GroupSpec& group);

}  // namespace lindlehmer
