"""Gröbner and standard bases, normal forms, staircase counting."""

from .engine import DEFAULT_BUDGET, BasisResult, local_basis, local_colength, normal_form, reduces_to_zero, s_polynomial, std_basis
from .kernel import Budget, ResourceExhausted
from .staircase import INFINITE, count_standard, graded_slice_dim, quotient_dim, standard_monomials

__all__ = [
    "local_basis",
    "local_colength",
    "DEFAULT_BUDGET", "BasisResult", "normal_form", "reduces_to_zero", "s_polynomial", "std_basis",
    "Budget", "ResourceExhausted",
    "INFINITE", "count_standard", "graded_slice_dim", "quotient_dim", "standard_monomials",
]
