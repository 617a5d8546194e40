"""
Iwahori and parahoric Whittaker values computed by operator recursion.

phi_{w1}(z; pi^{-lam} w2) vanishes unless lam is w2-almost dominant.  Otherwise
it equals v^{l(w2)} z^lam at w1 = w2, and moving w1 by s_i applies T_i for an
ascent or T_i^{-1} for a descent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .exactpoly import LaurentPoly
from .operators import T, apply_word
from .weylgroup import (
    Permutation, all_permutations, identity, is_dominant, is_w_almost_dominant,
    parabolic_subgroup, positive_roots, weyl_path,
)

__all__ = [
    "WhittakerQuery", "iwahori_value", "parahoric_value", "parahoric_cs_value",
    "spherical_value", "li_value", "deformed_denominator",
]


@dataclass(frozen=True)
class WhittakerQuery:
    lam: tuple[int, ...]
    w1: Permutation
    w2: Permutation
    J: frozenset = field(default_factory=frozenset)

    @property
    def r(self) -> int:
        return len(self.lam)

    def evaluate(self) -> LaurentPoly:
        if self.J:
            return parahoric_value(self.J, self.lam, self.w1, self.w2)
        return iwahori_value(self.lam, self.w1, self.w2)


@lru_cache(maxsize=None)
def _iwahori(lam: tuple, w1: Permutation, w2: Permutation) -> LaurentPoly:
    r = len(lam)
    if not is_w_almost_dominant(lam, w2):
        return LaurentPoly.zero(r)
    start = LaurentPoly.monomial(lam, w2.length())
    return apply_word(T, weyl_path(w2, w1), start)


def iwahori_value(lam: Sequence[int], w1: Permutation, w2: Permutation,
                  path: Sequence[tuple[int, int]] | None = None) -> LaurentPoly:
    """phi_{w1}(z; pi^{-lam} w2); an explicit path from w2 to w1 may be supplied."""
    lam = tuple(lam)
    if not (len(lam) == w1.r == w2.r):
        raise ValueError("degree mismatch")
    if path is None:
        return _iwahori(lam, w1, w2)
    if not is_w_almost_dominant(lam, w2):
        return LaurentPoly.zero(len(lam))
    return apply_word(T, path, LaurentPoly.monomial(lam, w2.length()))


def parahoric_value(J, lam: Sequence[int], w1: Permutation, w2: Permutation) -> LaurentPoly:
    """psi^J_{w1}(pi^{-lam} w2) = sum over y in W_J of phi_{w1 y}."""
    J = frozenset(J)
    r = len(lam)
    if not all(w1.is_right_ascent(j) for j in J):
        raise ValueError(f"{w1} is not a minimal coset representative for J={sorted(J)}")
    total = LaurentPoly.zero(r)
    for y in parabolic_subgroup(J, r):
        total = total + iwahori_value(lam, w1 * y, w2)
    return total


def deformed_denominator(roots: Sequence[tuple[int, int]], r: int, v_exponent: int = 1) -> LaurentPoly:
    """prod over (a, b) of (1 - v z_b / z_a)."""
    out = LaurentPoly.one(r)
    for a, b in roots:
        e = [0] * r
        e[a - 1] -= 1
        e[b - 1] += 1
        out = out * (LaurentPoly.one(r) - LaurentPoly.monomial(e, v_exponent))
    return out


def parahoric_cs_value(J, lam: Sequence[int]) -> LaurentPoly:
    from .macdonald import levi_character

    r = len(lam)
    if not is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    return deformed_denominator(positive_roots(J, r), r) * levi_character(J, lam)


def spherical_value(lam: Sequence[int], r: int | None = None) -> LaurentPoly:
    r = len(lam) if r is None else r
    if len(lam) != r:
        raise ValueError("degree mismatch")
    if not is_dominant(lam):
        return LaurentPoly.zero(r)
    e = identity(r)
    total = LaurentPoly.zero(r)
    for w in all_permutations(r):
        total = total + iwahori_value(lam, w, e)
    return total


def li_value(lam: Sequence[int], r: int | None = None) -> LaurentPoly:
    """sum over w of (-v)^{-l(w)} phi_w(pi^{-lam})."""
    r = len(lam) if r is None else r
    if len(lam) != r:
        raise ValueError("degree mismatch")
    if not is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")
    e = identity(r)
    total = LaurentPoly.zero(r)
    for w in all_permutations(r):
        n = w.length()
        total = total + iwahori_value(lam, w, e).shift((0,) * r, -n) * (-1) ** n
    return total
