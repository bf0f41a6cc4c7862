"""Exact Lind-Mahler measures and Lind-Lehmer constants of finite abelian groups.

Groups are given as "2,4" or [2, 4]. Polynomial variables map to the cyclic
factors in order, so over Z2 x Z8 the variable y lives on the order-8 factor.
"""

from ._lindlehmer import (
    ResourceLimit,
    VerificationFailure,
    allowed_residues,
    check_congruence,
    cyclotomic_resultant,
    is_zero_mod_ideal,
    lambda_search,
    measure,
    trivial_bound_poly,
    verify_witness,
)

__all__ = [
    "ResourceLimit",
    "VerificationFailure",
    "allowed_residues",
    "check_congruence",
    "cyclotomic_resultant",
    "is_zero_mod_ideal",
    "lambda_search",
    "measure",
    "trivial_bound_poly",
    "verify_witness",
]
