"""
Divided-difference operators on Laurent polynomials in z_1, ..., z_r.

With z^{alpha_i} = z_i / z_{i+1} and s_i swapping z_i and z_{i+1}:

    T_i f    = [f - s_i f] / (z^a - 1) - p [f - z^{-a} s_i f] / (z^a - 1)
    T_i^-1 f = [z^{-a} s_i f - z^a f] / (z^a - 1) - [s_i f - z^a f] / (p (z^a - 1))
    L_i f    = [f - s_i f] / (z^a - 1) - p [f - z^a s_i f] / (z^a - 1)
    d_i f    = (f - z^{-a} s_i f) / (1 - z^{-a})
    dc_i f   = (f - s_i f) / (z^a - 1)

where p is v or 1/v.  Every formula is evaluated by clearing the single
denominator to z_i - z_{i+1} and dividing exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactpoly import LaurentPoly, divide_exact
from .weylgroup import Permutation, reduced_word, rho

__all__ = [
    "OperatorKind", "T", "T_INV", "L", "PARTIAL", "PARTIAL_CIRC",
    "apply", "apply_word", "apply_perm", "conjugated_T", "conjugated_T_inverse",
    "rho_monomial",
]

TAGS = ("T", "T_inverse", "L", "partial", "partial_circ")


@dataclass(frozen=True)
class OperatorKind:
    tag: str
    v_inverted: bool = False

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown operator {self.tag!r}")

    def inverse(self) -> "OperatorKind":
        if self.tag == "T":
            return OperatorKind("T_inverse", self.v_inverted)
        if self.tag == "T_inverse":
            return OperatorKind("T", self.v_inverted)
        raise ValueError(f"{self.tag} has no inverse here")


T = OperatorKind("T")
T_INV = OperatorKind("T_inverse")
L = OperatorKind("L")
PARTIAL = OperatorKind("partial")
PARTIAL_CIRC = OperatorKind("partial_circ")


def _swap(r: int, i: int) -> tuple[int, ...]:
    perm = list(range(1, r + 1))
    perm[i - 1], perm[i] = i + 1, i
    return tuple(perm)


def _unit(r: int, i: int, k: int) -> tuple[int, ...]:
    e = [0] * r
    e[i - 1] = k
    return tuple(e)


def _pair(r: int, i: int, a: int, b: int) -> tuple[int, ...]:
    """Exponent vector of z_i^a z_{i+1}^b."""
    e = [0] * r
    e[i - 1], e[i] = a, b
    return tuple(e)


def apply(kind: OperatorKind, i: int, f: LaurentPoly) -> LaurentPoly:
    r = f.r
    if not 1 <= i < r:
        raise ValueError(f"operator index {i} out of range for rank {r}")
    sf = f.act(_swap(r, i))
    zi, zj = LaurentPoly.gen(r, i), LaurentPoly.gen(r, i + 1)
    den = zi - zj
    p_exp = -1 if kind.v_inverted else 1
    tag = kind.tag
    # Each numerator below is z_{i+1} times the bracketed numerator, so that the
    # denominator z^a - 1 becomes z_i - z_{i+1}.
    if tag == "T":
        inner = f.shift(_unit(r, i + 1, 1)) - sf.shift(_pair(r, i, -1, 2))
        num = (f - sf).shift(_unit(r, i + 1, 1)) - inner.shift((0,) * r, p_exp)
    elif tag == "T_inverse":
        a = sf.shift(_pair(r, i, -1, 2)) - f.shift(_unit(r, i, 1))
        b = sf.shift(_unit(r, i + 1, 1)) - f.shift(_unit(r, i, 1))
        num = a - b.shift((0,) * r, -p_exp)
    elif tag == "L":
        inner = f.shift(_unit(r, i + 1, 1)) - sf.shift(_unit(r, i, 1))
        num = (f - sf).shift(_unit(r, i + 1, 1)) - inner.shift((0,) * r, p_exp)
    elif tag == "partial":
        num = f * zi - sf * zj
    else:
        num = (f - sf).shift(_unit(r, i + 1, 1))
    return divide_exact(num, den)


def apply_word(kind: OperatorKind, word: Sequence[tuple[int, int]], f: LaurentPoly) -> LaurentPoly:
    """Apply the steps of a path in order; the first step acts first.

    A sign of -1 selects the inverse operator.
    """
    inv = None
    for i, sign in word:
        if sign == 1:
            f = apply(kind, i, f)
        elif sign == -1:
            if inv is None:
                inv = kind.inverse()
            f = apply(inv, i, f)
        else:
            raise ValueError(f"sign must be +1 or -1, got {sign}")
    return f


def apply_perm(kind: OperatorKind, w: Permutation, f: LaurentPoly) -> LaurentPoly:
    """The operator X_w = X_{i_1} ... X_{i_k} for a reduced word of w."""
    return apply_word(kind, [(i, 1) for i in reversed(reduced_word(w))], f)


def rho_monomial(r: int, sign: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(tuple(sign * x for x in rho(r)))


def conjugated_T(i: int, f: LaurentPoly, v_inverted: bool = False) -> LaurentPoly:
    """z^rho T_i z^-rho."""
    r = f.r
    kind = OperatorKind("T", v_inverted)
    return apply(kind, i, f.shift(tuple(-x for x in rho(r)))).shift(rho(r))


def conjugated_T_inverse(i: int, f: LaurentPoly, v_inverted: bool = False) -> LaurentPoly:
    r = f.r
    kind = OperatorKind("T_inverse", v_inverted)
    return apply(kind, i, f.shift(tuple(-x for x in rho(r)))).shift(rho(r))
