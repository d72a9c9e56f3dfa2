"""Exact linear-extension counting and balance constants for finite posets."""

from .analysis import (
    CaseDecomposition,
    ConvergenceRow,
    asymptotic_case_probabilities,
    case_decomposition,
    delta_sequence,
    tail_probability_limit_check,
)
from .engine import (
    BalanceReport,
    balance_constant,
    count_extensions,
    count_extensions_brute,
    precedence_probability,
)
from .family import GridTable, build_family, check_recurrence, grid_count, is_admissible
from .poset import OrderIdeal, Poset, build_poset, enumerate_ideals, is_less
from .quad import QuadNum, closed_form, kappa, lucas_pair, one_minus_kappa, quad_arith, quad_sign
from .survey import survey_small_posets

__all__ = [
    "BalanceReport",
    "CaseDecomposition",
    "ConvergenceRow",
    "GridTable",
    "OrderIdeal",
    "Poset",
    "QuadNum",
    "asymptotic_case_probabilities",
    "balance_constant",
    "build_family",
    "build_poset",
    "case_decomposition",
    "check_recurrence",
    "closed_form",
    "count_extensions",
    "count_extensions_brute",
    "delta_sequence",
    "enumerate_ideals",
    "grid_count",
    "is_admissible",
    "is_less",
    "kappa",
    "lucas_pair",
    "one_minus_kappa",
    "precedence_probability",
    "quad_arith",
    "quad_sign",
    "survey_small_posets",
    "tail_probability_limit_check",
]
