"""trifrac: integer polynomial solutions of m/(n0 + n1*t) = 1/x + 1/y + 1/z."""

from .base_solutions import BaseTriple, enumerate_base_solutions, triples_with_member
from .families import (
    DiscriminantReport,
    FamilySolution,
    RoleTriple,
    discriminant_identity,
    minus_family,
    plus_family,
)
from .intmath import (
    Rational,
    divisors,
    extended_gcd,
    gcd,
    is_prime,
    is_quadratic_residue,
    primes_up_to,
)
from .qpoly import RationalPoly, linear
from .scan_audit import (
    AuditInstance,
    AuditReport,
    ScanReport,
    ScanRow,
    audit_condition_i,
    audit_corollary3,
    audit_corollary4,
    scan_residues,
)
from .theorem import (
    DecisionOutcome,
    DegreeReport,
    KlEvidence,
    ParamFamily,
    ParamSet,
    PolyTriple,
    ResidueClass,
    analyze_degrees,
    canonicalize,
    condition_iii_holds,
    construct_solution,
    decide,
    enumerate_condition_iii,
    enumerate_kl,
    identity_residual,
    search_condition_iii,
    solve_condition_ii,
    verify_identity,
)

__version__ = "0.1.0"

__all__ = [
    "AuditInstance",
    "AuditReport",
    "BaseTriple",
    "DecisionOutcome",
    "DegreeReport",
    "DiscriminantReport",
    "FamilySolution",
    "KlEvidence",
    "ParamFamily",
    "ParamSet",
    "PolyTriple",
    "Rational",
    "RationalPoly",
    "ResidueClass",
    "RoleTriple",
    "ScanReport",
    "ScanRow",
    "analyze_degrees",
    "audit_condition_i",
    "audit_corollary3",
    "audit_corollary4",
    "canonicalize",
    "condition_iii_holds",
    "construct_solution",
    "decide",
    "discriminant_identity",
    "divisors",
    "enumerate_base_solutions",
    "enumerate_condition_iii",
    "enumerate_kl",
    "extended_gcd",
    "gcd",
    "identity_residual",
    "is_prime",
    "is_quadratic_residue",
    "linear",
    "minus_family",
    "plus_family",
    "primes_up_to",
    "scan_residues",
    "search_condition_iii",
    "solve_condition_ii",
    "triples_with_member",
    "verify_identity",
]
