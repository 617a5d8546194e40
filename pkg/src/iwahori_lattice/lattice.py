"""
Colored lattice models: Boltzmann weights, boundary data, states and
partition functions, and symbolic Yang-Baxter checks.

Spins are small integers.  A horizontal edge carries PLUS (0) or one color
c >= 1.  A vertical edge of a fused vertex carries a set of colors, stored as
a bitmask with bit c-1 for color c; a vertical edge of a monochrome vertex of
color c carries 0 or c.  Vertex configurations are read (left, top, right,
bottom); R-vertex configurations are read (A, B, C, D) = (bottom-left,
top-left, top-right, bottom-right), with lines A -> C and B -> D.

Rows are numbered 1..r from the top and row i carries the spectral parameter
z_i.  Columns are labelled N..0 from left to right.  Colored paths enter at
the top boundary and exit on the right.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, Sequence

from .exactpoly import LaurentPoly
from .weylgroup import (
    Permutation, identity, is_w_almost_dominant, parabolic_blocks, parabolic_subgroup,
    stabilizer_of_flag,
)

__all__ = [
    "PLUS", "mask_of", "colors_of",
    "fused_weight", "fused_completions", "monochrome_weight", "monochrome_completions",
    "r_weight", "aux_r_weight",
    "SystemSpec", "LatticeState", "build_system", "build_raw_system", "default_flag",
    "enumerate_states", "partition_function", "count_states", "state_sum",
    "YBEReport", "verify_fused_ybe", "verify_monochrome_ybe",
    "StrictReductionReport", "verify_strict_reduction",
]

PLUS = 0


def mask_of(colors) -> int:
    m = 0
    for c in colors:
        if c < 1:
            raise ValueError(f"invalid color {c}")
        m |= 1 << (c - 1)
    return m


def colors_of(mask: int) -> list[int]:
    out, c = [], 1
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return out


def _count(mask: int, lo: int, hi: int) -> int:
    """Number of colors c in mask with lo < c < hi."""
    if hi <= lo + 1:
        return 0
    band = ((1 << (hi - 1)) - 1) & ~((1 << lo) - 1)
    return bin(mask & band).count("1")


# Local weights are built in a rank-1 ring whose z1 is the row parameter and
# later moved to the right variable with LaurentPoly.embed.

_Z = LaurentPoly.gen(1, 1)
_V = LaurentPoly.v_var(1)
_ONE = LaurentPoly.one(1)


def _mono(z: int, v: int, coeff: int = 1, one_minus_v: bool = False) -> LaurentPoly:
    p = LaurentPoly.monomial((z,), v, coeff)
    return p - p * _V if one_minus_v else p


@lru_cache(maxsize=None)
def _fused_local(left: int, top: int, palette: int) -> tuple:
    """Admissible (right, bottom, weight) completions of a fused vertex."""
    out = []
    if left == PLUS:
        n = bin(top).count("1")
        out.append((PLUS, top, _mono(0, n, (-1) ** n)))
        for c in colors_of(top):
            below = _count(top, 0, c)
            above = _count(top, c, palette + 1)
            out.append((c, top & ~(1 << (c - 1)), _mono(0, below + above, (-1) ** below)))
        return tuple(out)
    c = left
    bit = 1 << (c - 1)
    out.append((c, top, _mono(1, _count(top, c, palette + 1))))
    if not top & bit:
        n = _count(top, c, palette + 1)
        out.append((PLUS, top | bit, _mono(1, n, (-1) ** n, one_minus_v=True)))
        for d in colors_of(top):
            if d > c:
                between = _count(top, c, d)
                above = _count(top, d, palette + 1)
                out.append((d, (top | bit) & ~(1 << (d - 1)),
                            _mono(1, between + above, (-1) ** between, one_minus_v=True)))
    return tuple(out)


def fused_completions(left: int, top: int, palette: int) -> tuple:
    return _fused_local(left, top, palette)


def fused_weight(cfg: Sequence[int], i: int = 1, r: int = 1, palette: int | None = None) -> LaurentPoly:
    """Weight of a fused vertex (left, top, right, bottom) in row i of a rank-r ring."""
    left, top, right, bottom = cfg
    palette = r if palette is None else palette
    for rt, bt, w in _fused_local(left, top, palette):
        if rt == right and bt == bottom:
            return w.embed(r, [i])
    return LaurentPoly.zero(r)


def _monochrome_local(left: int, top: int, right: int, bottom: int, c: int) -> LaurentPoly | None:
    for s in (top, bottom):
        if s not in (PLUS, c):
            raise ValueError(f"vertical spin {s} on a vertex of color {c}")
    if left == top == right == bottom == PLUS:
        return _ONE
    if top == bottom == c:
        if left == right != PLUS:
            d = left
            return _Z if d == c else (_V if c > d else _ONE)
        if left == right == PLUS:
            return -_V
        return None
    if top == bottom == PLUS:
        if left == right != PLUS:
            return _Z if left == c else _ONE
        return None
    if left == c and top == PLUS and right == PLUS and bottom == c:
        return _Z - _Z * _V
    if left == PLUS and top == c and right == c and bottom == PLUS:
        return _ONE
    return None


def monochrome_weight(cfg: Sequence[int], column_color: int, i: int = 1, r: int = 1) -> LaurentPoly:
    w = _monochrome_local(*cfg, column_color)
    return LaurentPoly.zero(r) if w is None else w.embed(r, [i])


@lru_cache(maxsize=None)
def _monochrome_comp(left: int, top: int, c: int) -> tuple:
    out = []
    for right in {PLUS, left, c}:
        for bottom in (PLUS, c):
            w = _monochrome_local(left, top, right, bottom, c)
            if w is not None:
                out.append((right, bottom, w))
    return tuple(sorted(out, key=lambda t: (t[0], t[1])))


def monochrome_completions(left: int, top: int, c: int) -> tuple:
    return _monochrome_comp(left, top, c)


def _r_local(A: int, B: int, C: int, D: int, zi: LaurentPoly, zj: LaurentPoly,
             less: Callable[[int, int], bool], swap_less: Callable[[int, int], bool]) -> LaurentPoly | None:
    v = LaurentPoly.v_var(zi.r)
    if A == B == C == D:
        return zj - v * zi if A == PLUS else zi - v * zj
    if A == D and B == C and A != B:
        if A != PLUS and B != PLUS:
            return (zi - v * zi) if less(A, B) else (zj - v * zj)
        if B == PLUS:
            return zi - v * zi
        return zj - v * zj
    if A == C and B == D and A != B:
        if A != PLUS and B != PLUS:
            return (zi - zj) if swap_less(B, A) else v * (zi - zj)
        if A == PLUS:
            return v * (zi - zj)
        return zi - zj
    return None


def _natural(a: int, b: int) -> bool:
    return a < b


def r_weight(cfg: Sequence[int], zi: LaurentPoly, zj: LaurentPoly) -> LaurentPoly:
    """Colored R-vertex weight for (A, B, C, D) with spectral parameters (z_i, z_j)."""
    w = _r_local(*cfg, zi, zj, _natural, _natural)
    return LaurentPoly.zero(zi.r) if w is None else w


def cyclic_order(c: int, palette: int) -> Callable[[int, int], bool]:
    """The color order in which c is smallest: c < c+1 < ... < palette < 1 < ... < c-1."""
    def less(a: int, b: int) -> bool:
        return (a - c) % palette < (b - c) % palette
    return less


def aux_r_weight(cfg: Sequence[int], vertex_color: int, zi: LaurentPoly, zj: LaurentPoly,
                 palette: int, cyclic_swaps: bool = False) -> LaurentPoly:
    """R-vertex for the monochrome Yang-Baxter equation labelled by vertex_color.

    Crossing configurations (d, e, e, d) compare colors in the cyclic order
    starting at vertex_color; passing configurations (d, e, d, e) use the
    natural order unless cyclic_swaps is set.  Label palette + 1 is the same
    as label 1.
    """
    less = cyclic_order(vertex_color, palette)
    w = _r_local(*cfg, zi, zj, less, less if cyclic_swaps else _natural)
    return LaurentPoly.zero(zi.r) if w is None else w


# ---------------------------------------------------------------------------
# Systems


@dataclass(frozen=True)
class SystemSpec:
    """Boundary data of a colored lattice model.

    top[p] is the color mask entering column N - p from above and right[i-1]
    the color leaving row i on the right.
    """
    r: int
    N: int
    palette: int
    top: tuple[int, ...]
    right: tuple[int, ...]
    mode: str = "fused"
    lam: tuple[int, ...] | None = None
    w1: Permutation | None = None
    w2: Permutation | None = None
    flag: tuple[int, ...] | None = None
    admissible: bool = True

    @property
    def columns(self) -> list[int]:
        return list(range(self.N, -1, -1))

    def top_colors(self) -> dict[int, list[int]]:
        return {self.N - p: colors_of(m) for p, m in enumerate(self.top) if m}

    def with_mode(self, mode: str) -> "SystemSpec":
        return _replace(self, mode=mode)

    def with_N(self, N: int) -> "SystemSpec":
        if N < self.N and any(self.top[: self.N - N]):
            raise ValueError(f"N={N} is too small for this boundary")
        if N >= self.N:
            top = (0,) * (N - self.N) + self.top
        else:
            top = self.top[self.N - N:]
        return _replace(self, N=N, top=top)


def _replace(spec: SystemSpec, **kw) -> SystemSpec:
    from dataclasses import replace
    return replace(spec, **kw)


def default_flag(J, r: int) -> tuple[int, ...]:
    """Block b of k blocks gets color k + 1 - b."""
    blocks = parabolic_blocks(J, r)
    k = len(blocks)
    return tuple(k - b for b, block in enumerate(blocks) for _ in block)


def build_system(r: int, lam: Sequence[int], w1: Permutation | None = None,
                 w2: Permutation | None = None, flag: Sequence[int] | None = None,
                 J=None, N: int | None = None, mode: str = "fused") -> SystemSpec:
    """The system with top colors gamma_{w2^{-1}(i)} at columns lam_i + r - i and
    right colors gamma_{w1^{-1}(i)}.

    Without flag or J the standard flag (r, r-1, ..., 1) is used; J alone
    selects its default parahoric flag.  A lam that is not w2-almost dominant
    is accepted but marked inadmissible, and its partition function is 0.
    """
    lam = tuple(lam)
    if len(lam) != r:
        raise ValueError(f"lambda {lam} does not have {r} parts")
    w1 = identity(r) if w1 is None else w1
    w2 = identity(r) if w2 is None else w2
    if w1.r != r or w2.r != r:
        raise ValueError("permutation degree does not match r")
    if mode not in ("fused", "monochrome"):
        raise ValueError(f"unknown mode {mode!r}")
    if flag is None:
        flag = default_flag(J if J is not None else (), r)
    flag = tuple(flag)
    if len(flag) != r or any(c < 1 for c in flag):
        raise ValueError(f"flag {flag} must have {r} positive colors")
    if any(flag[i] < flag[i + 1] for i in range(r - 1)):
        raise ValueError(f"flag {flag} is not weakly decreasing")
    stab = stabilizer_of_flag(flag)
    if J is not None and frozenset(J) != stab:
        raise ValueError(f"flag {flag} does not have stabilizer J={sorted(J)}")
    for name, w in (("w1", w1), ("w2", w2)):
        if not all(w.is_right_ascent(j) for j in stab):
            raise ValueError(f"{name}={w} is not a minimal coset representative for J={sorted(stab)}")
    if r and lam[-1] < 0:
        raise ValueError("the last part of lambda must be nonnegative")
    cols = [lam[i] + r - 1 - i for i in range(r)]
    if min(cols, default=0) < 0:
        raise ValueError(f"lambda {lam} puts a color left of column 0")
    need = max(cols, default=0)
    N = need if N is None else N
    if N < need:
        raise ValueError(f"N={N} is smaller than the required {need}")
    w2inv, w1inv = w2.inverse(), w1.inverse()
    top = [0] * (N + 1)
    for i in range(1, r + 1):
        color = flag[w2inv(i) - 1]
        p = N - cols[i - 1]
        if top[p] & (1 << (color - 1)):
            raise ValueError(f"color {color} appears twice in column {cols[i - 1]}")
        top[p] |= 1 << (color - 1)
    right = tuple(flag[w1inv(i) - 1] for i in range(1, r + 1))
    return SystemSpec(r=r, N=N, palette=max((r,) + flag), top=tuple(top), right=right, mode=mode,
                      lam=lam, w1=w1, w2=w2, flag=flag,
                      admissible=is_w_almost_dominant(lam, w2))


def build_raw_system(r: int, top_columns: dict[int, Sequence[int]], right: Sequence[int],
                     N: int | None = None, mode: str = "fused", palette: int | None = None) -> SystemSpec:
    """A system given directly by its boundary: top_columns maps column -> colors."""
    right = tuple(right)
    if len(right) != r:
        raise ValueError("right boundary must have one entry per row")
    need = max(top_columns, default=0)
    N = need if N is None else N
    if N < need or min(top_columns, default=0) < 0:
        raise ValueError("top boundary columns out of range")
    top = [0] * (N + 1)
    for col, colors in top_columns.items():
        m = mask_of(colors)
        if bin(m).count("1") != len(list(colors)):
            raise ValueError(f"repeated color in column {col}")
        top[N - col] = m
    all_colors = [c for cs in top_columns.values() for c in cs] + [c for c in right if c]
    palette = max([r] + all_colors) if palette is None else palette
    return SystemSpec(r=r, N=N, palette=palette, top=tuple(top), right=right, mode=mode)


# ---------------------------------------------------------------------------
# The row engine shared by enumeration and partition functions.


@dataclass(frozen=True)
class _Site:
    column: int
    color: int  # 0 for fused sites, the vertex color for monochrome sites


def _sites(spec: SystemSpec) -> list[_Site]:
    if spec.mode == "fused":
        return [_Site(col, 0) for col in spec.columns]
    return [_Site(col, k) for col in spec.columns for k in range(1, spec.palette + 1)]


def _initial_top(spec: SystemSpec) -> tuple[int, ...]:
    if spec.mode == "fused":
        return spec.top
    out = []
    for m in spec.top:
        out.extend(k if m & (1 << (k - 1)) else PLUS for k in range(1, spec.palette + 1))
    return tuple(out)


def _completer(spec: SystemSpec):
    cache: dict = {}
    r = spec.r
    fused = spec.mode == "fused"

    def complete(site: _Site, left: int, top: int, row: int):
        key = (site.color, left, top, row)
        hit = cache.get(key)
        if hit is None:
            local = (_fused_local(left, top, spec.palette) if fused
                     else _monochrome_comp(left, top, site.color))
            hit = tuple((rt, bt, w.embed(r, [row])) for rt, bt, w in local)
            cache[key] = hit
        return hit

    return complete


def _transfer(spec: SystemSpec, one, lift):
    """Row-by-row sum over vertical edge states; lift maps a local weight into the accumulator ring."""
    r = spec.r
    sites = _sites(spec)
    complete = _completer(spec)
    frontier = {_initial_top(spec): one}
    for row in range(1, r + 1):
        last = row == r
        target = spec.right[row - 1]
        new: dict = {}
        for tops, weight in frontier.items():
            partial = {(PLUS, ()): weight}
            for p, site in enumerate(sites):
                nxt: dict = {}
                for (h, bots), w in partial.items():
                    for rt, bt, lw in complete(site, h, tops[p], row):
                        if last and bt:
                            continue
                        key = (rt, bots + (bt,))
                        term = w * lift(lw)
                        prev = nxt.get(key)
                        nxt[key] = term if prev is None else prev + term
                partial = nxt
            for (h, bots), w in partial.items():
                if h == target:
                    prev = new.get(bots)
                    new[bots] = w if prev is None else prev + w
        frontier = new
    return frontier.get((PLUS,) * len(sites))


def partition_function(spec: SystemSpec) -> LaurentPoly:
    """Sum of state weights, computed row by row over vertical edge states."""
    if not spec.admissible:
        return LaurentPoly.zero(spec.r)
    z = _transfer(spec, LaurentPoly.one(spec.r), lambda w: w)
    return LaurentPoly.zero(spec.r) if z is None else z


def count_states(spec: SystemSpec) -> int:
    """Number of states with every vertex weight nonzero."""
    n = _transfer(spec, 1, lambda w: 1)
    return n or 0


@dataclass(frozen=True)
class LatticeState:
    """A full spin assignment.

    horizontal[i][p] is the edge left of site p in row i+1 (p = len(sites) is
    the right boundary); vertical[i][p] is the edge above site p in row i+1
    (i = r is the bottom boundary).
    """
    spec: SystemSpec
    horizontal: tuple[tuple[int, ...], ...]
    vertical: tuple[tuple[int, ...], ...]
    vertex_weights: tuple[tuple[LaurentPoly, ...], ...]
    weight: LaurentPoly

    def vertical_masks(self) -> Iterator[int]:
        """Every vertical edge as a color mask, boundaries included."""
        for row in self.vertical:
            for s in row:
                yield s if self.spec.mode == "fused" else (1 << (s - 1) if s else 0)

    def fused_vertical_masks(self) -> list[list[int]]:
        """Vertical edges regrouped by original column (monochrome sites merged)."""
        if self.spec.mode == "fused":
            return [list(row) for row in self.vertical]
        P = self.spec.palette
        return [[mask_of([s for s in row[k * P:(k + 1) * P] if s]) for k in range(len(row) // P)]
                for row in self.vertical]

    def to_json(self) -> dict:
        sites = _sites(self.spec)
        return {
            "rows": self.spec.r,
            "columns": [s.column for s in sites],
            "site_colors": [s.color for s in sites] if self.spec.mode == "monochrome" else None,
            "horizontal": [list(h) for h in self.horizontal],
            "vertical": [[colors_of(m) if self.spec.mode == "fused" else ([m] if m else []) for m in row]
                         for row in self.vertical],
            "vertex_weights": [[str(w) for w in row] for row in self.vertex_weights],
            "weight": str(self.weight),
        }


def enumerate_states(spec: SystemSpec) -> Iterator[LatticeState]:
    """Depth-first search through sites in reading order, left to right and top to bottom."""
    r = spec.r
    sites = _sites(spec)
    n = len(sites)
    complete = _completer(spec)
    horiz = [[PLUS] * (n + 1) for _ in range(r)]
    vert = [list(_initial_top(spec))] + [[PLUS] * n for _ in range(r)]
    weights = [[None] * n for _ in range(r)]

    def walk(row: int, p: int, acc: LaurentPoly) -> Iterator[LatticeState]:
        if p == n:
            if horiz[row][n] != spec.right[row]:
                return
            if row + 1 == r:
                if any(vert[r]):
                    return
                yield LatticeState(spec, tuple(map(tuple, horiz)), tuple(map(tuple, vert)),
                                   tuple(map(tuple, weights)), acc)
                return
            yield from walk(row + 1, 0, acc)
            return
        for rt, bt, lw in complete(sites[p], horiz[row][p], vert[row][p], row + 1):
            if row + 1 == r and bt:
                continue
            horiz[row][p + 1] = rt
            vert[row + 1][p] = bt
            weights[row][p] = lw
            yield from walk(row, p + 1, acc * lw)

    yield from walk(0, 0, LaurentPoly.one(r))


def state_sum(spec: SystemSpec) -> tuple[LaurentPoly, int]:
    """Partition function by explicit enumeration, with the number of states."""
    total, count = LaurentPoly.zero(spec.r), 0
    for s in enumerate_states(spec):
        total = total + s.weight
        count += 1
    return total, count


# ---------------------------------------------------------------------------
# Yang-Baxter equations


@dataclass
class YBEReport:
    passed: bool
    boundaries: int
    checked_colors: list[int] = field(default_factory=list)
    counterexample: dict | None = None

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{status}: {self.boundaries} boundary assignments checked"


def _ybe_compare(lhs: dict, rhs: dict, boundaries: int, extra: dict) -> YBEReport:
    for key in sorted(set(lhs) | set(rhs)):
        a = lhs.get(key, LaurentPoly.zero(2))
        b = rhs.get(key, LaurentPoly.zero(2))
        if a != b:
            return YBEReport(False, boundaries, counterexample=dict(
                extra, boundary=key, lhs=str(a), rhs=str(b)))
    return YBEReport(True, boundaries)


def _acc(d: dict, key, value: LaurentPoly) -> None:
    prev = d.get(key)
    d[key] = value if prev is None else prev + value


def _ybe_sides(horiz: Sequence[int], verts: Sequence[int], comp_i, comp_j, r_left, r_right):
    """Both sides of the RTT relation as maps from boundaries (a, b, c, d, e, f) to polynomials.

    Left:  R(a, b, x, y), then row z_i: (x, c, d, m), then row z_j: (y, m, e, f).
    Right: row z_j: (b, c, y', m'), then row z_i: (a, m', x', f), then R(x', y', d, e).
    """
    lhs: dict = {}
    rhs: dict = {}
    for (A, B, C, D), rw in r_left:
        for c in verts:
            for d, m, wi in comp_i(C, c):
                for e, f, wj in comp_j(D, m):
                    _acc(lhs, (A, B, c, d, e, f), rw * wi * wj)
    right_by_left: dict = {}
    for (A, B, C, D), rw in r_right:
        right_by_left.setdefault((A, B), []).append((C, D, rw))
    for b in horiz:
        for c in verts:
            for y, m, wj in comp_j(b, c):
                for a in horiz:
                    for x, f, wi in comp_i(a, m):
                        for d, e, rw in right_by_left.get((x, y), ()):
                            _acc(rhs, (a, b, c, d, e, f), wi * wj * rw)
    lhs = {k: p for k, p in lhs.items() if p}
    rhs = {k: p for k, p in rhs.items() if p}
    return lhs, rhs


def _r_table(horiz, weight_fn) -> list:
    out = []
    for cfg in product(horiz, repeat=4):
        w = weight_fn(cfg)
        if w:
            out.append((cfg, w))
    return out


_ZI, _ZJ = LaurentPoly.gen(2, 1), LaurentPoly.gen(2, 2)


def verify_fused_ybe(r: int) -> YBEReport:
    """R(z_i, z_j) T_i T_j = T_j T_i R(z_i, z_j) for fused rows, all boundaries."""
    horiz = list(range(r + 1))
    verts = list(range(1 << r))

    def comp(row):
        cache = {}

        def f(left, top):
            key = (left, top)
            if key not in cache:
                cache[key] = [(rt, bt, w.embed(2, [row])) for rt, bt, w in _fused_local(left, top, r)]
            return cache[key]
        return f

    table = _r_table(horiz, lambda cfg: r_weight(cfg, _ZI, _ZJ))
    lhs, rhs = _ybe_sides(horiz, verts, comp(1), comp(2), table, table)
    return _ybe_compare(lhs, rhs, len(horiz) ** 4 * len(verts) ** 2, {"palette": r})


def verify_monochrome_ybe(r: int, colors: Sequence[int] | None = None,
                          cyclic_swaps: bool = False) -> YBEReport:
    """For each color c: R^(c) T^(c) T^(c) = T^(c) T^(c) R^(c+1), with R^(r+1) = R^(1) = R."""
    horiz = list(range(r + 1))
    colors = list(range(1, r + 1)) if colors is None else list(colors)
    total = 0
    for c in colors:
        verts = [PLUS, c]

        def comp(row, c=c):
            cache = {}

            def f(left, top):
                key = (left, top)
                if key not in cache:
                    cache[key] = [(rt, bt, w.embed(2, [row])) for rt, bt, w in _monochrome_comp(left, top, c)]
                return cache[key]
            return f

        left = _r_table(horiz, lambda cfg: aux_r_weight(cfg, c, _ZI, _ZJ, r, cyclic_swaps))
        right = _r_table(horiz, lambda cfg: aux_r_weight(cfg, c % r + 1, _ZI, _ZJ, r, cyclic_swaps))
        lhs, rhs = _ybe_sides(horiz, verts, comp(1), comp(2), left, right)
        count = len(horiz) ** 4 * len(verts) ** 2
        total += count
        rep = _ybe_compare(lhs, rhs, total, {"palette": r, "color": c})
        if not rep.passed:
            rep.checked_colors = colors[: colors.index(c) + 1]
            return rep
    return YBEReport(True, total, checked_colors=colors)


# ---------------------------------------------------------------------------
# Strict states and the reduction from J to a smaller parabolic


@dataclass
class StrictReductionReport:
    passed: bool
    J: frozenset
    K: frozenset
    colors: tuple[int, int]
    strict_states: int
    nonstrict_states: int
    z_strict: LaurentPoly
    z_nonstrict: LaurentPoly
    z_parahoric: LaurentPoly

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (f"{status}: J={sorted(self.J)} K={sorted(self.K)} "
                f"strict={self.strict_states} nonstrict={self.nonstrict_states}")


def verify_strict_reduction(r: int, J, lam: Sequence[int], w1: Permutation, w2: Permutation,
                            block: int | None = None, mode: str = "fused") -> StrictReductionReport:
    """Split one block of J into its first r_i - 1 indices and its last index.

    Colors c (rest of the block) and c' = c - 1 (last index) refine the block's
    color.  The states of the refined systems over W_J / W_K with no vertical
    edge holding both c and c' must reproduce Z of the J-system, and the
    remaining states must cancel.
    """
    J = frozenset(J)
    blocks = parabolic_blocks(J, r)
    if block is None:
        block = next((b for b, bl in enumerate(blocks, start=1) if len(bl) > 1), None)
        if block is None:
            raise ValueError("J is empty")
    if not 1 <= block <= len(blocks) or len(blocks[block - 1]) < 2:
        raise ValueError(f"block {block} of J={sorted(J)} has no internal reflection")
    m = blocks[block - 1][-1] - 1
    K = J - {m}
    flagK = default_flag(K, r)
    c, c2 = flagK[m - 1], flagK[m]
    both = (1 << (c - 1)) | (1 << (c2 - 1))
    z_parahoric = partition_function(build_system(r, lam, w1, w2, J=J, mode=mode))
    z_strict = LaurentPoly.zero(r)
    z_nonstrict = LaurentPoly.zero(r)
    n_strict = n_nonstrict = 0
    for y in parabolic_subgroup(J, r):
        if not all(y.is_right_ascent(k) for k in K):
            continue
        spec = build_system(r, lam, w1 * y, w2, J=K, mode=mode)
        if not spec.admissible:
            continue
        for state in enumerate_states(spec):
            masks = [mk for row in state.fused_vertical_masks() for mk in row]
            if any(mk & both == both for mk in masks):
                z_nonstrict = z_nonstrict + state.weight
                n_nonstrict += 1
            else:
                z_strict = z_strict + state.weight
                n_strict += 1
    passed = z_strict == z_parahoric and z_nonstrict.is_zero()
    return StrictReductionReport(passed, J, K, (c, c2), n_strict, n_nonstrict,
                                 z_strict, z_nonstrict, z_parahoric)
