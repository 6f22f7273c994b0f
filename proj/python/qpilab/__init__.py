"""Exact and numeric engines for partial-isometry semigroups."""

from ._core import (
    bp_check,
    compose,
    count,
    crossed_model_check,
    double_matrix,
    enumerate_signed,
    membership,
    monte_carlo_law,
    mu_bruteforce,
    mu_formula,
    sample,
    sign_mixing,
    triple_moment,
    weingarten_moment,
)

__all__ = [
    "bp_check",
    "compose",
    "count",
    "crossed_model_check",
    "double_matrix",
    "enumerate_signed",
    "membership",
    "monte_carlo_law",
    "mu_bruteforce",
    "mu_formula",
    "sample",
    "sign_mixing",
    "triple_moment",
    "weingarten_moment",
]
