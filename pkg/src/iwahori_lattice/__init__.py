"""Exact Iwahori and parahoric Whittaker values from operator recursions and colored lattice models."""

from .exactpoly import LaurentPoly, NotDivisible, RationalFn
from .lattice import build_system, partition_function
from .weylgroup import Permutation, parse_permutation
from .whittaker import iwahori_value, parahoric_value

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "RationalFn", "NotDivisible", "Permutation", "parse_permutation",
    "iwahori_value", "parahoric_value", "build_system", "partition_function",
]
