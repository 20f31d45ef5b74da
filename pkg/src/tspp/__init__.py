"""Exact computations around the symmetric generating function of TSPPs."""

from .ring import LaurentPoly, ONE, ZERO, canonical_string, parse_poly, poly_det, poly_substitute

__all__ = ["LaurentPoly", "ONE", "ZERO", "canonical_string", "parse_poly", "poly_det", "poly_substitute"]
