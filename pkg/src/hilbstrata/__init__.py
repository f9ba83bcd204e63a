"""Explicit equations for border-basis schemes and Groebner strata of the Hilbert scheme of points."""

from .staircase import StandardSet, enumerate_standard_sets
from .order import TermOrder, compare, find_separating_weight, parse_order
from .poly import Poly, TPoly, TVar, MarkedFamily, extend_family, reduce

__all__ = [
    "StandardSet", "enumerate_standard_sets", "TermOrder", "compare",
    "find_separating_weight", "parse_order", "Poly", "TPoly", "TVar",
    "MarkedFamily", "extend_family", "reduce",
]
