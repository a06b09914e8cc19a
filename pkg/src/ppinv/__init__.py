"""Compositional inverses of permutation polynomials over finite fields."""

from .field import FieldElement, FieldSpec, make_field, parse_field
from .inverse import invert_coeff_formula, invert_lagrange, is_permutation, verify_inverse
from .poly import Poly, format_poly, parse_poly

__all__ = [
    "FieldElement",
    "FieldSpec",
    "make_field",
    "parse_field",
    "Poly",
    "format_poly",
    "parse_poly",
    "is_permutation",
    "invert_lagrange",
    "invert_coeff_formula",
    "verify_inverse",
]
