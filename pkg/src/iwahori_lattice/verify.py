"""
Exhaustive sweeps comparing lattice-model partition functions with operator
computations, plus wrappers around the R-matrix checks.

Each sweep returns a SweepReport; the first disagreement stops the sweep and
is kept as the counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterator

from .exactpoly import LaurentPoly
from .lattice import build_system, partition_function, verify_strict_reduction
from .macdonald import hall_littlewood, schur
from .operators import rho_monomial
from .rmatrix import uncolored_factor_check, verify_cocycle, verify_commuting_diagram
from .weylgroup import (
    all_permutations, is_w_almost_dominant, min_coset_reps, positive_roots, rho,
)
from .whittaker import deformed_denominator, iwahori_value, li_value, parahoric_value

__all__ = ["SweepReport", "THEOREMS", "run_theorem", "shifted_weights", "parabolic_sets"]


@dataclass
class SweepReport:
    name: str
    passed: bool
    checked: int
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.checked} identities checked)"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "counterexample": self.counterexample, **self.details}


def shifted_weights(r: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    """All lam with lam + rho weakly decreasing and parts of lam + rho at most max_parts."""
    rh = rho(r)
    for mu in combinations_with_replacement(range(max_parts, -1, -1), r):
        lam = tuple(a - b for a, b in zip(mu, rh))
        if lam[-1] >= 0:
            yield lam


def dominant_weights(r: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    for lam in combinations_with_replacement(range(max_parts, -1, -1), r):
        yield tuple(lam)


def parabolic_sets(r: int, nonempty: bool = False) -> list[frozenset]:
    idx = range(1, r)
    out = [frozenset(c) for k in range(len(idx) + 1) for c in combinations(idx, k)]
    return [J for J in out if J] if nonempty else out


class _Sweep:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0

    def check(self, ok: bool, **context) -> SweepReport | None:
        self.checked += 1
        if ok:
            return None
        return SweepReport(self.name, False, self.checked, {k: _show(v) for k, v in context.items()})

    def done(self, **details) -> SweepReport:
        return SweepReport(self.name, True, self.checked, details=details)


def _show(x):
    if isinstance(x, (frozenset, set)):
        return sorted(x)
    if isinstance(x, (LaurentPoly,)) or hasattr(x, "images"):
        return str(x)
    return x


def colored_whittaker(r: int = 3, max_parts: int = 5, mode: str = "fused") -> SweepReport:
    sweep = _Sweep("coloredwhittaker")
    zr = rho_monomial(r)
    lams = list(shifted_weights(r, max_parts))
    for w1 in all_permutations(r):
        for w2 in all_permutations(r):
            for lam in lams:
                if not is_w_almost_dominant(lam, w2):
                    continue
                z = partition_function(build_system(r, lam, w1, w2, mode=mode))
                expected = zr * iwahori_value(lam, w1, w2)
                bad = sweep.check(z == expected, lam=lam, w1=w1, w2=w2, lattice=z, operator=expected)
                if bad:
                    return bad
    return sweep.done()


def parahoric(r: int = 3, max_parts: int = 4, mode: str = "fused") -> SweepReport:
    sweep = _Sweep("parahoric")
    zr = rho_monomial(r)
    lams = list(shifted_weights(r, max_parts))
    for J in parabolic_sets(r):
        reps = min_coset_reps(J, r)
        for w1 in reps:
            for w2 in reps:
                for lam in lams:
                    if not is_w_almost_dominant(lam, w2):
                        continue
                    z = partition_function(build_system(r, lam, w1, w2, J=J, mode=mode))
                    expected = zr * parahoric_value(J, lam, w1, w2)
                    bad = sweep.check(z == expected, J=J, lam=lam, w1=w1, w2=w2,
                                      lattice=z, operator=expected)
                    if bad:
                        return bad
    return sweep.done()


def tokuyama(r: int = 3, max_parts: int = 4, mode: str = "fused") -> SweepReport:
    sweep = _Sweep("tokuyama")
    zr = rho_monomial(r)
    factor = deformed_denominator(positive_roots(None, r), r)
    for lam in dominant_weights(r, max_parts):
        z = partition_function(build_system(r, lam, flag=(1,) * r, mode=mode))
        expected = zr * factor * schur(lam)
        bad = sweep.check(z == expected, lam=lam, lattice=z, formula=expected)
        if bad:
            return bad
    return sweep.done()


def hall_littlewood_sweep(r: int = 3, max_parts: int = 3) -> SweepReport:
    sweep = _Sweep("hall-littlewood")
    zr = rho_monomial(r)
    for lam in dominant_weights(r, max_parts):
        mu = tuple(a + b for a, b in zip(lam, rho(r)))
        lhs = zr * li_value(lam)
        rhs = hall_littlewood(mu, t_inverted=True)
        bad = sweep.check(lhs == rhs, lam=lam, whittaker=lhs, symmetrized=rhs)
        if bad:
            return bad
    return sweep.done()


def strict_reduction(r: int = 3, max_parts: int = 3) -> SweepReport:
    sweep = _Sweep("strict-reduction")
    lams = list(shifted_weights(r, max_parts))
    nonstrict = 0
    for J in parabolic_sets(r, nonempty=True):
        reps = min_coset_reps(J, r)
        for w1 in reps:
            for w2 in reps:
                for lam in lams:
                    if not is_w_almost_dominant(lam, w2):
                        continue
                    rep = verify_strict_reduction(r, J, lam, w1, w2)
                    nonstrict += rep.nonstrict_states
                    bad = sweep.check(rep.passed, J=J, lam=lam, w1=w1, w2=w2,
                                      z_strict=rep.z_strict, z_parahoric=rep.z_parahoric,
                                      z_nonstrict=rep.z_nonstrict)
                    if bad:
                        return bad
    return sweep.done(nonstrict_states=nonstrict)


def diagram(r: int = 3) -> SweepReport:
    rep = verify_commuting_diagram(r)
    ok, scalar = uncolored_factor_check(1, max(r, 2))
    if not rep.passed:
        return SweepReport("diagram", False, rep.checked, {"failure": rep.failure})
    if not ok:
        return SweepReport("diagram", False, rep.checked + 1, {"failure": "uncolored factor"})
    return SweepReport("diagram", True, rep.checked + 1, details={"uncolored_scalar": str(scalar)})


def cocycle(r: int = 3) -> SweepReport:
    rep = verify_cocycle(r)
    return SweepReport("cocycle", rep.passed, rep.checked,
                       None if rep.passed else {"failure": rep.failure})


THEOREMS: dict[str, Callable[..., SweepReport]] = {
    "coloredwhittaker": colored_whittaker,
    "parahoric": parahoric,
    "tokuyama": tokuyama,
    "hall-littlewood": hall_littlewood_sweep,
    "strict-reduction": strict_reduction,
    "diagram": diagram,
    "cocycle": cocycle,
}

_SIZED = {"coloredwhittaker", "parahoric", "tokuyama", "hall-littlewood", "strict-reduction"}


def run_theorem(name: str, r: int | None = None, max_parts: int | None = None,
                mode: str | None = None) -> SweepReport:
    if name not in THEOREMS:
        raise ValueError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}")
    kw = {}
    if r is not None:
        kw["r"] = r
    if max_parts is not None:
        if name not in _SIZED:
            raise ValueError(f"{name} takes no --max-parts bound")
        kw["max_parts"] = max_parts
    if mode is not None and name in ("coloredwhittaker", "parahoric", "tokuyama"):
        kw["mode"] = mode
    return THEOREMS[name](**kw)
