"""
Finite linear algebra of the normalized intertwiners and R-matrices.

An IwahoriVector is a combination of basis symbols Phi_w; a TensorVector is
a combination of u_i for index tuples i that are permutations of (1..r).
Both carry a spectral tag sigma recording that the vector lives at sigma(z),
where (sigma z)_i = z_{sigma^{-1}(i)}.  Every map indexed by k moves the tag
from sigma to s_k sigma, and z^{alpha_k} always means
(sigma z)_k / (sigma z)_{k+1}.

Index labels j here are ordered 1 > 2 > ... > r; label j is the lattice
color r + 1 - j, which is the color the lattice assigns to the right
boundary for the same Weyl element.  The colored R-matrix is read off the
lattice R-vertex at parameters (z_i, z_j) = (z_{k+1}, z_k): input slots
(k, k+1) sit on edges (C, D), output slots on (B, A), and every weight is
divided by the all-one-color weight z_{k+1} - v z_k.

The Jimbo R-matrix uses the deformation variable as q; comparisons substitute
v = q^2 into the other side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exactpoly import LaurentPoly, RationalFn, rf_equal
from .lattice import PLUS, r_weight
from .weylgroup import Permutation, all_permutations, identity, longest

__all__ = [
    "IwahoriVector", "TensorVector", "basis_vector", "intertwine", "intertwine_word",
    "theta_map", "xi_map", "label_to_color", "color_to_label",
    "r_col_entry", "r_col_apply", "jimbo_r_apply",
    "DiagramReport", "verify_commuting_diagram", "verify_cocycle", "uncolored_factor_check",
]


def label_to_color(j: int, r: int) -> int:
    return r + 1 - j


def color_to_label(c: int, r: int) -> int:
    return r + 1 - c


@dataclass(frozen=True)
class IwahoriVector:
    r: int
    tag: Permutation
    coeffs: dict = field(default_factory=dict)

    def coefficient(self, w: Permutation) -> RationalFn:
        return self.coeffs.get(w, RationalFn.zero(self.r))

    def equals(self, other: "IwahoriVector") -> bool:
        _check_tags(self.tag, other.tag)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(rf_equal(self.coefficient(k), other.coefficient(k)) for k in keys)


@dataclass(frozen=True)
class TensorVector:
    r: int
    tag: Permutation
    coeffs: dict = field(default_factory=dict)

    def coefficient(self, idx: tuple) -> RationalFn:
        return self.coeffs.get(idx, RationalFn.zero(self.r))

    def equals(self, other: "TensorVector") -> bool:
        _check_tags(self.tag, other.tag)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(rf_equal(self.coefficient(k), other.coefficient(k)) for k in keys)

    def is_alternating(self) -> bool:
        return all(len(set(k)) == len(k) for k, c in self.coeffs.items() if not c.is_zero())

    def substitute_v_power(self, n: int) -> "TensorVector":
        return TensorVector(self.r, self.tag, {k: c.substitute_v_power(n) for k, c in self.coeffs.items()})


def _check_tags(a: Permutation, b: Permutation) -> None:
    if a != b:
        raise ValueError(f"spectral tags differ: {a} vs {b}")


def _add(d: dict, key, value: RationalFn) -> None:
    prev = d.get(key)
    d[key] = value if prev is None else prev + value


def _spectral(tag: Permutation, r: int) -> list[LaurentPoly]:
    """The variables (sigma z)_1, ..., (sigma z)_r."""
    inv = tag.inverse()
    return [LaurentPoly.gen(r, inv(i)) for i in range(1, r + 1)]


def _check_index(k: int, r: int) -> None:
    if not 1 <= k < r:
        raise ValueError(f"index {k} out of range for r={r}")


def basis_vector(w: Permutation, tag: Permutation | None = None) -> IwahoriVector:
    r = w.r
    return IwahoriVector(r, identity(r) if tag is None else tag, {w: RationalFn(LaurentPoly.one(r))})


def intertwine(k: int, vec: IwahoriVector) -> IwahoriVector:
    """The normalized intertwiner for s_k.

    Ascent (l(s_k w) > l(w)): Phi_w -> (1-v)/(1-v x) Phi_w + (1-x)/(1-v x) Phi_{s_k w}
    Descent:                  Phi_w -> x(1-v)/(1-v x) Phi_w + v(1-x)/(1-v x) Phi_{s_k w}
    with x = z^{alpha_k}.
    """
    r = vec.r
    _check_index(k, r)
    z = _spectral(vec.tag, r)
    one = LaurentPoly.one(r)
    v = LaurentPoly.v_var(r)
    zk, zk1 = z[k - 1], z[k]
    # Multiply through by z_{k+1}: x = zk / zk1, so 1 - v x = (zk1 - v zk) / zk1.
    den = zk1 - v * zk
    up_stay = RationalFn((one - v) * zk1, den)
    up_move = RationalFn(zk1 - zk, den)
    down_stay = RationalFn((one - v) * zk, den)
    down_move = RationalFn(v * (zk1 - zk), den)
    out: dict = {}
    for w, c in vec.coeffs.items():
        sw = w.left_mul_simple(k)
        if w.is_left_ascent(k):
            _add(out, w, c * up_stay)
            _add(out, sw, c * up_move)
        else:
            _add(out, w, c * down_stay)
            _add(out, sw, c * down_move)
    return IwahoriVector(r, vec.tag.left_mul_simple(k), out)


def intertwine_word(word: Sequence[int], vec: IwahoriVector) -> IwahoriVector:
    """A_{s_{i_1} ... s_{i_m}} via the cocycle rule; the last letter acts first."""
    for k in reversed(word):
        vec = intertwine(k, vec)
    return vec


def theta_map(vec: IwahoriVector) -> TensorVector:
    """Phi_w -> u_{w(i0)} with w(i0)_i = w^{-1}(i)."""
    return TensorVector(vec.r, vec.tag, {w.inverse().images: c for w, c in vec.coeffs.items()})


def xi_map(vec: TensorVector) -> TensorVector:
    """u_i -> v_i; the identity on coordinates."""
    return TensorVector(vec.r, vec.tag, dict(vec.coeffs))


def r_col_entry(x: int, y: int, out: tuple[int, int], k: int, tag: Permutation, r: int) -> RationalFn:
    """Coefficient of u_out in R_col applied to slots (k, k+1) holding labels (x, y)."""
    z = _spectral(tag, r)
    zk, zk1 = z[k - 1], z[k]
    X, Y = label_to_color(x, r), label_to_color(y, r)
    o1, o2 = label_to_color(out[0], r), label_to_color(out[1], r)
    # input on (C, D) = (X, Y); output on (B, A) = (o1, o2)
    w = r_weight((o2, o1, X, Y), zk1, zk)
    v = LaurentPoly.v_var(r)
    return RationalFn(w, zk1 - v * zk)


def r_col_apply(k: int, vec: TensorVector) -> TensorVector:
    r = vec.r
    _check_index(k, r)
    out: dict = {}
    for idx, c in vec.coeffs.items():
        x, y = idx[k - 1], idx[k]
        if x == y:
            raise ValueError(f"{idx} is not an alternating index")
        for o in ((x, y), (y, x)):
            e = r_col_entry(x, y, o, k, vec.tag, r)
            if not e.is_zero():
                new = idx[: k - 1] + o + idx[k + 1:]
                _add(out, new, c * e)
    return TensorVector(r, vec.tag.left_mul_simple(k), out)


def _jimbo_units(r: int, x: LaurentPoly, q: LaurentPoly) -> list:
    """Matrix units (a, b, c, d, coefficient) of R_q(x) = sum coeff e_ab (x) e_cd, before dividing by 1 - q^2 x."""
    qi = q ** -1
    units = []
    for i in range(1, r + 1):
        units.append((i, i, i, i, q - x * qi))
        for j in range(1, i):
            units.append((i, j, j, i, -qi * (1 - x)))
            units.append((j, i, i, j, -q * (1 - x)))
            units.append((j, j, i, i, q - qi))
            units.append((i, i, j, j, x * (q - qi)))
    return units


def jimbo_r_apply(k: int, vec: TensorVector, twist: bool = True) -> TensorVector:
    """-q R_q(z^{alpha_k}) on slots (k, k+1); the deformation variable plays q."""
    r = vec.r
    _check_index(k, r)
    z = _spectral(vec.tag, r)
    zk, zk1 = z[k - 1], z[k]
    q = LaurentPoly.v_var(r)
    xn = zk * zk1 ** -1
    den = LaurentPoly.one(r) - q * q * xn
    scale = -q if twist else LaurentPoly.one(r)
    units = _jimbo_units(r, xn, q)
    out: dict = {}
    for idx, c in vec.coeffs.items():
        s, t = idx[k - 1], idx[k]
        for a, b, cc, d, coef in units:
            if b == s and d == t:
                new = idx[: k - 1] + (a, cc) + idx[k + 1:]
                _add(out, new, c * RationalFn(scale * coef, den))
    return TensorVector(r, vec.tag.left_mul_simple(k), out)


@dataclass
class DiagramReport:
    passed: bool
    checked: int
    failure: str | None = None

    def summary(self) -> str:
        return f"{'pass' if self.passed else 'FAIL'}: {self.checked} comparisons"


def verify_commuting_diagram(r: int) -> DiagramReport:
    """theta A = R_col theta and xi R_col = (-q R_q) xi on every basis vector and k."""
    checked = 0
    for w in all_permutations(r):
        for k in range(1, r):
            phi = basis_vector(w)
            left = theta_map(intertwine(k, phi))
            right = r_col_apply(k, theta_map(phi))
            checked += 1
            if not left.equals(right):
                return DiagramReport(False, checked, f"intertwiner square fails at w={w}, k={k}")
            u = theta_map(phi)
            top = xi_map(r_col_apply(k, u)).substitute_v_power(2)
            bottom = jimbo_r_apply(k, xi_map(u))
            checked += 1
            if not top.equals(bottom):
                return DiagramReport(False, checked, f"Jimbo square fails at w={w}, k={k}")
    return DiagramReport(True, checked)


def verify_cocycle(r: int) -> DiagramReport:
    """A_{s_i} at s_i z composed with A_{s_i} at z is the identity, and the
    intertwiner along any two reduced words of w0 agrees."""
    checked = 0
    for w in all_permutations(r):
        phi = basis_vector(w)
        for i in range(1, r):
            back = intertwine(i, intertwine(i, phi))
            checked += 1
            if not back.equals(phi):
                return DiagramReport(False, checked, f"involution fails at w={w}, i={i}")
        words = _reduced_words(longest(r))
        first = intertwine_word(words[0], phi)
        for word in words[1:]:
            checked += 1
            if not intertwine_word(word, phi).equals(first):
                return DiagramReport(False, checked, f"words {words[0]} and {word} disagree at w={w}")
    return DiagramReport(True, checked)


def _reduced_words(w: Permutation) -> list[list[int]]:
    if w.is_identity():
        return [[]]
    out = []
    for i in range(1, w.r):
        if not w.is_left_ascent(i):
            out.extend([i] + rest for rest in _reduced_words(w.left_mul_simple(i)))
    return out


def uncolored_factor_check(k: int = 1, r: int = 2) -> tuple[bool, LaurentPoly]:
    """(1 - v z^{-a_k}) / (1 - v z^{a_k}) against the uncolored R-weight.

    The uncolored weight at (z_i, z_j) = (z_{k+1}, z_k), normalized like R_col
    by the one-color weight, is (z_k - v z_{k+1}) / (z_{k+1} - v z_k).  The
    factor equals it times the monomial z_{k+1} / z_k.
    """
    _check_index(k, r)
    zk, zk1 = LaurentPoly.gen(r, k), LaurentPoly.gen(r, k + 1)
    v = LaurentPoly.v_var(r)
    factor = RationalFn(zk - v * zk1, zk) / RationalFn(zk1 - v * zk, zk1)
    plus = r_weight((PLUS,) * 4, zk1, zk)
    colored = r_weight((1, 1, 1, 1), zk1, zk)
    scalar = zk1 * zk ** -1
    return rf_equal(factor, RationalFn(plus * scalar, colored)), scalar
