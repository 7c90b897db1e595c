"""Exact convergents of Ramanujan's generalized Rogers-Ramanujan continued fraction."""

from ._core import (
    SUITES,
    DivisionByZero,
    IndexError,
    InvalidRange,
    NonConvergent,
    NotDivisible,
    NumericBreakdown,
    Polynomial,
    RationalFunction,
    asi_u,
    cf_convergents_forward,
    cf_finite_backward,
    cf_numeric,
    convergence_demo,
    convergent,
    g,
    g_difference,
    mu,
    nu,
    series_ratio_entry15,
    verify,
)

__all__ = [
    "SUITES",
    "DivisionByZero",
    "IndexError",
    "InvalidRange",
    "NonConvergent",
    "NotDivisible",
    "NumericBreakdown",
    "Polynomial",
    "RationalFunction",
    "asi_u",
    "cf_convergents_forward",
    "cf_finite_backward",
    "cf_numeric",
    "convergence_demo",
    "convergent",
    "g",
    "g_difference",
    "mu",
    "nu",
    "series_ratio_entry15",
    "verify",
]
