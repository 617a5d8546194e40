"""
Symmetric and nonsymmetric polynomials attached to Whittaker values.

Schur and Levi characters come from Demazure operators, Theta from the Weyl
character formula, and Hall-Littlewood polynomials from direct symmetrization,
so each has a route independent of the Whittaker recursion.
"""

from __future__ import annotations

from typing import Sequence

from .exactpoly import LaurentPoly, RationalFn, divide_exact
from .operators import L, PARTIAL, apply_perm
from .weylgroup import (
    Permutation, act_on_weight, all_permutations, identity, is_dominant, longest,
    longest_parabolic, normalize_to_almost_dominant, parabolic_subgroup, rho,
)

__all__ = [
    "schur", "levi_character", "theta", "theta_apply", "vandermonde",
    "hall_littlewood", "e_inf", "prescribed_symmetry_sum",
]


def _require_dominant(lam: Sequence[int]) -> None:
    if not is_dominant(lam):
        raise ValueError(f"{tuple(lam)} is not dominant")


def schur(lam: Sequence[int], r: int | None = None) -> LaurentPoly:
    r = len(lam) if r is None else r
    if len(lam) != r:
        raise ValueError("degree mismatch")
    _require_dominant(lam)
    return apply_perm(PARTIAL, longest(r), LaurentPoly.monomial(tuple(lam)))


def levi_character(J, lam: Sequence[int]) -> LaurentPoly:
    _require_dominant(lam)
    return apply_perm(PARTIAL, longest_parabolic(J, len(lam)), LaurentPoly.monomial(tuple(lam)))


def vandermonde(r: int) -> LaurentPoly:
    """prod over i < j of (z_i - z_j), which equals z^rho prod (1 - z^{-alpha})."""
    out = LaurentPoly.one(r)
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            out = out * (LaurentPoly.gen(r, i) - LaurentPoly.gen(r, j))
    return out


def _sign(w: Permutation) -> int:
    return -1 if w.length() % 2 else 1


def theta_apply(f: LaurentPoly) -> LaurentPoly:
    """z^-rho prod (1 - z^-alpha)^-1 sum (-1)^l(w) w (z^rho f)."""
    r = f.r
    g = f.shift(rho(r))
    alt = LaurentPoly.zero(r)
    for w in all_permutations(r):
        alt = alt + g.act(w.images) * _sign(w)
    return divide_exact(alt, vandermonde(r))


def theta(lam: Sequence[int]) -> LaurentPoly:
    _require_dominant(lam)
    return theta_apply(LaurentPoly.monomial(tuple(lam)))


def hall_littlewood(mu: Sequence[int], r: int | None = None, t_inverted: bool = False) -> LaurentPoly:
    """P_mu(z; t) for strictly decreasing mu, with t = v (or 1/v)."""
    r = len(mu) if r is None else r
    if len(mu) != r:
        raise ValueError("degree mismatch")
    if any(mu[i] <= mu[i + 1] for i in range(r - 1)) or (r and mu[-1] < 0):
        raise ValueError(f"{tuple(mu)} is not a strictly decreasing nonnegative partition")
    t = LaurentPoly.monomial((0,) * r, -1 if t_inverted else 1)
    z = [LaurentPoly.gen(r, i) for i in range(1, r + 1)]
    top = LaurentPoly.monomial(tuple(mu))
    bottom = LaurentPoly.one(r)
    for i in range(r):
        for j in range(i + 1, r):
            top = top * (z[i] - t * z[j])
            bottom = bottom * (z[i] - z[j])
    total = RationalFn.zero(r)
    for w in all_permutations(r):
        total = total + RationalFn(top.act(w.images), bottom.act(w.images))
    return total.to_laurent()


def e_inf(nu: Sequence[int]) -> LaurentPoly:
    """E_nu(z; infinity, v) recovered from the Iwahori value phi_w(pi^-lam).

    nu = w0 w (lam + rho); the result is (-v)^{-l(w)} w0 (z^rho phi_w).
    """
    from .whittaker import iwahori_value

    nu = tuple(nu)
    r = len(nu)
    if len(set(nu)) != r or any(x < 0 for x in nu):
        raise ValueError(f"{nu} must have distinct nonnegative parts")
    w0 = longest(r)
    # w (lam + rho) = w0 nu, and the sorted parts of nu are lam + rho.
    target = act_on_weight(w0, nu)
    w, lam = normalize_to_almost_dominant(target)
    w = w.inverse()
    phi = iwahori_value(lam, w, identity(r))
    n = w.length()
    return phi.shift(rho(r)).act(w0.images).shift((0,) * r, -n) * (-1) ** n


def prescribed_symmetry_sum(J, eta: Sequence[int], at_q_zero: bool = True) -> LaurentPoly:
    """sum over w in W_J of (-t)^{-l(w)} L_{w,t} z^eta, with t the deformation variable."""
    if not at_q_zero:
        raise NotImplementedError("only the q = 0 specialization is available")
    eta = tuple(eta)
    _require_dominant(eta)
    r = len(eta)
    start = LaurentPoly.monomial(eta)
    total = LaurentPoly.zero(r)
    for w in parabolic_subgroup(J, r):
        n = w.length()
        total = total + apply_perm(L, w, start).shift((0,) * r, -n) * (-1) ** n
    return total
