"""Decide o-polynomial status of functions over GF(2^n) and compute the Walsh sums behind it."""

from opoly.field import FieldSpec, find_default_modulus, is_irreducible
from opoly.func import VecFunc, from_monomial, from_polynomial, from_table
from opoly.checker import CheckReport, full_report

__all__ = [
    "CheckReport",
    "FieldSpec",
    "VecFunc",
    "find_default_modulus",
    "from_monomial",
    "from_polynomial",
    "from_table",
    "full_report",
    "is_irreducible",
]
