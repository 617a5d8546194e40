"""
The symmetric group S_r as the Weyl group of GL_r.

Permutations are stored in one-line notation (w(1), ..., w(r)) with values
1..r, and composition is (u * v)(i) = u(v(i)).  Left multiplication by s_i
therefore swaps the values i and i+1 in the one-line word.

>>> w = Permutation((2, 3, 1))
>>> length_and_descents(w)
(2, frozenset({2}))
>>> reduced_word(w)
[1, 2]
>>> weyl_path(identity(3), from_word([1, 2], 3))
[(2, 1), (1, 1)]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "identity", "simple", "longest", "from_word", "all_permutations",
    "length_and_descents", "reduced_word", "bruhat_leq", "coset_decompose",
    "min_coset_reps", "parabolic_subgroup", "longest_parabolic", "parabolic_blocks",
    "stabilizer_of_flag", "is_dominant", "is_w_almost_dominant",
    "normalize_to_almost_dominant", "weyl_path", "rho", "act_on_weight",
    "parse_permutation", "parse_int_list", "positive_roots",
]


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def r(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.r != other.r:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.r
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        w = self.images
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def left_mul_simple(self, i: int) -> "Permutation":
        """s_i * w: swap the values i and i+1."""
        return Permutation(tuple(i + 1 if x == i else i if x == i + 1 else x for x in self.images))

    def right_mul_simple(self, i: int) -> "Permutation":
        """w * s_i: swap the positions i and i+1."""
        w = list(self.images)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def is_left_ascent(self, i: int) -> bool:
        """l(s_i w) > l(w), i.e. w^{-1}(i) < w^{-1}(i+1)."""
        w = self.images
        return w.index(i) < w.index(i + 1)

    def is_right_ascent(self, i: int) -> bool:
        """l(w s_i) > l(w), i.e. w(i) < w(i+1)."""
        return self.images[i - 1] < self.images[i]

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return ",".join(map(str, self.images))


def identity(r: int) -> Permutation:
    return Permutation(tuple(range(1, r + 1)))


def simple(i: int, r: int) -> Permutation:
    if not 1 <= i < r:
        raise ValueError(f"s{i} is not a simple reflection of S{r}")
    return identity(r).right_mul_simple(i)


def longest(r: int) -> Permutation:
    return Permutation(tuple(range(r, 0, -1)))


def from_word(word: Sequence[int], r: int) -> Permutation:
    """The product s_{i_1} ... s_{i_k}."""
    w = identity(r)
    for i in word:
        if not 1 <= i < r:
            raise ValueError(f"s{i} is not a simple reflection of S{r}")
        w = w.right_mul_simple(i)
    return w


@lru_cache(maxsize=None)
def all_permutations(r: int) -> tuple[Permutation, ...]:
    """All of S_r, sorted by length and then one-line notation."""
    return tuple(sorted((Permutation(p) for p in permutations(range(1, r + 1))),
                        key=lambda w: (w.length(), w.images)))


def length_and_descents(w: Permutation) -> tuple[int, frozenset]:
    return w.length(), frozenset(i for i in range(1, w.r) if w.is_left_ascent(i))


def reduced_word(w: Permutation) -> list[int]:
    """Strip left descents one at a time: w = s_i (s_i w)."""
    word = []
    while not w.is_identity():
        i = next(i for i in range(1, w.r) if not w.is_left_ascent(i))
        word.append(i)
        w = w.left_mul_simple(i)
    return word


@lru_cache(maxsize=None)
def _lower_interval(w: Permutation) -> frozenset:
    # Subword products of one reduced word: the set grows one letter at a time.
    below = {identity(w.r)}
    for i in reduced_word(w):
        below |= {x.right_mul_simple(i) for x in below}
    return frozenset(below)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    if u.r != w.r:
        raise ValueError("degree mismatch")
    return u in _lower_interval(w)


def coset_decompose(w: Permutation, J: Iterable[int]) -> tuple[Permutation, Permutation]:
    """Factor w = w^J * w_J with w^J minimal in w W_J."""
    J = frozenset(J)
    m = w
    while True:
        j = next((j for j in sorted(J) if not m.is_right_ascent(j)), None)
        if j is None:
            break
        m = m.right_mul_simple(j)
    return m, m.inverse() * w


def min_coset_reps(J: Iterable[int], r: int) -> list[Permutation]:
    J = frozenset(J)
    return [w for w in all_permutations(r) if all(w.is_right_ascent(j) for j in J)]


def parabolic_subgroup(J: Iterable[int], r: int) -> list[Permutation]:
    J = frozenset(J)
    _check_subset(J, r)
    group = {identity(r)}
    frontier = list(group)
    while frontier:
        new = []
        for x in frontier:
            for j in J:
                y = x.right_mul_simple(j)
                if y not in group:
                    group.add(y)
                    new.append(y)
        frontier = new
    return sorted(group, key=lambda w: (w.length(), w.images))


def longest_parabolic(J: Iterable[int], r: int) -> Permutation:
    return max(parabolic_subgroup(J, r), key=lambda w: w.length())


def _check_subset(J: frozenset, r: int) -> None:
    bad = [j for j in J if not 1 <= j < r]
    if bad:
        raise ValueError(f"indices {bad} are not simple reflections of S{r}")


def parabolic_blocks(J: Iterable[int], r: int) -> list[list[int]]:
    """The index blocks [1..r_1], [r_1+1..], ... whose internal reflections lie in J."""
    J = frozenset(J)
    _check_subset(J, r)
    blocks = [[1]]
    for i in range(1, r):
        if i in J:
            blocks[-1].append(i + 1)
        else:
            blocks.append([i + 1])
    return blocks


def stabilizer_of_flag(flag: Sequence[int]) -> frozenset:
    return frozenset(i for i in range(1, len(flag)) if flag[i - 1] == flag[i])


def positive_roots(J: Iterable[int] | None, r: int) -> list[tuple[int, int]]:
    """Pairs (a, b) with a < b standing for e_a - e_b, restricted to W_J when J is given."""
    if J is None:
        return [(a, b) for a in range(1, r + 1) for b in range(a + 1, r + 1)]
    return [(a, b) for block in parabolic_blocks(J, r) for a in block for b in block if a < b]


def rho(r: int) -> tuple[int, ...]:
    return tuple(range(r - 1, -1, -1))


def act_on_weight(w: Permutation, mu: Sequence[int]) -> tuple[int, ...]:
    """(w mu)_i = mu_{w^{-1}(i)}."""
    out = [0] * len(mu)
    for i, x in enumerate(mu, start=1):
        out[w(i) - 1] = x
    return tuple(out)


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def is_w_almost_dominant(lam: Sequence[int], w: Permutation) -> bool:
    if len(lam) != w.r:
        raise ValueError("degree mismatch")
    for i in range(1, w.r):
        bound = 0 if w.is_left_ascent(i) else -1
        if lam[i - 1] - lam[i] < bound:
            return False
    return True


def normalize_to_almost_dominant(mu: Sequence[int]) -> tuple[Permutation, tuple[int, ...]]:
    """The longest w sorting mu into weakly decreasing order, with lambda = w(mu) - rho."""
    r = len(mu)
    # Stable sort by decreasing value, ties placed in decreasing index order.
    order = sorted(range(1, r + 1), key=lambda j: (-mu[j - 1], -j))
    w = Permutation(tuple(order)).inverse()
    lam = tuple(mu[j - 1] - p for j, p in zip(order, rho(r)))
    return w, lam


def weyl_path(w2: Permutation, w1: Permutation) -> list[tuple[int, int]]:
    """Simple reflections taking w2 to w1 by left multiplication, with length signs."""
    if w1.r != w2.r:
        raise ValueError("degree mismatch")
    path = []
    w = w2
    for i in reversed(reduced_word(w1 * w2.inverse())):
        path.append((i, 1 if w.is_left_ascent(i) else -1))
        w = w.left_mul_simple(i)
    return path


def parse_permutation(text: str, r: int) -> Permutation:
    """Accept one-line "2,3,1", a word "s1 s2", or "1"/"e"/"id" for the identity."""
    t = text.strip()
    if t in {"e", "id", "1", ""} and (r != 1 or t != "1"):
        return identity(r)
    if t.startswith("s"):
        word = []
        for tok in t.replace("*", " ").split():
            if not tok.startswith("s") or not tok[1:].isdigit():
                raise ValueError(f"bad reflection {tok!r}")
            word.append(int(tok[1:]))
        return from_word(word, r)
    images = parse_int_list(t)
    if len(images) != r:
        raise ValueError(f"permutation {t!r} does not have degree {r}")
    return Permutation(tuple(images))


def parse_int_list(text: str) -> list[int]:
    t = text.strip()
    if not t:
        return []
    return [int(x) for x in t.split(",")]
