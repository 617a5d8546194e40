"""
Exact Laurent polynomials in z_1, ..., z_r and a deformation variable v.

A polynomial stores a mapping from exponent tuples to nonzero rational
coefficients.  The tuple has r + 1 entries: the z-exponents followed by the
v-exponent.  Coefficients are Python ints when integral and Fractions
otherwise, so integer-only computations never touch Fraction arithmetic.

>>> z1, z2 = LaurentPoly.gen(2, 1), LaurentPoly.gen(2, 2)
>>> v = LaurentPoly.v_var(2)
>>> str((z1 + z2) * (z1 - v * z2))
'-v*z1*z2 - v*z2^2 + z1^2 + z1*z2'
>>> str(divide_exact(z1**2 - z2**2, z1 - z2))
'z1 + z2'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "LaurentPoly", "RationalFn", "NotDivisible",
    "make_monomial", "arith", "act_variables", "divide_exact", "rf_equal",
]

Coeff = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _as_coeff(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return _norm(c)
    return _norm(Fraction(c))


def _div_coeff(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def _coeff_str(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class LaurentPoly:
    """Immutable exact Laurent polynomial of rank r (r z-variables plus v)."""

    __slots__ = ("r", "terms", "_hash")

    def __init__(self, r: int, terms: Mapping[tuple, Coeff] | None = None):
        if r < 0:
            raise ValueError("rank must be nonnegative")
        self.r = r
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != r + 1:
                    raise ValueError(f"exponent {e} does not have length {r + 1}")
                c = _as_coeff(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, r: int, terms: dict) -> "LaurentPoly":
        p = object.__new__(cls)
        p.r = r
        p.terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, r: int) -> "LaurentPoly":
        return cls._raw(r, {})

    @classmethod
    def const(cls, r: int, c=1) -> "LaurentPoly":
        return make_monomial(r, (0,) * r, 0, c)

    @classmethod
    def one(cls, r: int) -> "LaurentPoly":
        return cls.const(r, 1)

    @classmethod
    def gen(cls, r: int, i: int) -> "LaurentPoly":
        """The variable z_i (1-based)."""
        if not 1 <= i <= r:
            raise ValueError(f"z{i} is not a variable of rank {r}")
        e = [0] * (r + 1)
        e[i - 1] = 1
        return cls._raw(r, {tuple(e): 1})

    @classmethod
    def v_var(cls, r: int) -> "LaurentPoly":
        return cls._raw(r, {(0,) * r + (1,): 1})

    @classmethod
    def monomial(cls, z_exponents: Sequence[int], v_exponent: int = 0, coeff=1) -> "LaurentPoly":
        return make_monomial(len(z_exponents), z_exponents, v_exponent, coeff)

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, z_exponents: Sequence[int], v_exponent: int = 0) -> Coeff:
        return self.terms.get(tuple(z_exponents) + (v_exponent,), 0)

    def min_exponents(self) -> tuple:
        return tuple(min(col) for col in zip(*self.terms)) if self.terms else (0,) * (self.r + 1)

    def max_exponents(self) -> tuple:
        return tuple(max(col) for col in zip(*self.terms)) if self.terms else (0,) * (self.r + 1)

    def _check(self, other: "LaurentPoly") -> None:
        if self.r != other.r:
            raise ValueError(f"rank mismatch: {self.r} vs {other.r}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.r, other)
        return NotImplemented

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.r, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.r, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.r, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_coeff(other)
            if not other:
                return LaurentPoly.zero(self.r)
            return LaurentPoly._raw(self.r, {e: _norm(c * other) for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.r, {e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise NotDivisible("only monomials are invertible")
            (e, c), = self.terms.items()
            return LaurentPoly._raw(self.r, {tuple(-x for x in e): _div_coeff(1, c)}) ** (-n)
        result = LaurentPoly.one(self.r)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, z_exponents: Sequence[int], v_exponent: int = 0) -> "LaurentPoly":
        """Multiply by the monomial z^e v^k without general multiplication."""
        d = tuple(z_exponents) + (v_exponent,)
        return LaurentPoly._raw(self.r, {tuple(a + b for a, b in zip(e, d)): c
                                         for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.r, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.r == other.r and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.r, frozenset(self.terms.items())))
        return self._hash

    # substitutions

    def act(self, perm: Sequence[int], invert_v: bool = False) -> "LaurentPoly":
        """Send z_i to z_{perm[i-1]}; optionally v to 1/v."""
        r = self.r
        if len(perm) != r:
            raise ValueError(f"permutation of degree {len(perm)} on rank {r}")
        out = {}
        sgn = -1 if invert_v else 1
        for e, c in self.terms.items():
            new = [0] * (r + 1)
            for i in range(r):
                new[perm[i] - 1] = e[i]
            new[r] = sgn * e[r]
            out[tuple(new)] = c
        return LaurentPoly._raw(r, out)

    def substitute_v_power(self, k: int) -> "LaurentPoly":
        """Replace v by v^k (k = 2 realizes v = q^2 when v is read as q)."""
        return self._collect((e[:-1] + (e[-1] * k,), c) for e, c in self.terms.items())

    def specialize_v(self, value) -> "LaurentPoly":
        """Evaluate v at an exact rational number."""
        value = Fraction(value)
        if value == 0 and any(e[-1] < 0 for e in self.terms):
            raise ZeroDivisionError("negative power of v at v = 0")
        return self._collect((e[:-1] + (0,), c * value ** e[-1]) for e, c in self.terms.items())

    def _collect(self, pairs) -> "LaurentPoly":
        out: dict = {}
        for e, c in pairs:
            out[e] = out.get(e, 0) + c
        return LaurentPoly._raw(self.r, {e: _norm(c) for e, c in out.items() if c})

    def embed(self, r: int, positions: Sequence[int]) -> "LaurentPoly":
        """View as a polynomial of rank r, sending z_i to z_{positions[i-1]}."""
        def move(e):
            new = [0] * (r + 1)
            for i, p in enumerate(positions):
                new[p - 1] += e[i]
            new[r] = e[-1]
            return tuple(new)
        return LaurentPoly._raw(r, {})._collect((move(e), c) for e, c in self.terms.items())

    # rendering

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order on (z_1, ..., z_r, v), largest first."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for n, (e, c) in enumerate(self.sorted_terms()):
            factors = []
            if e[-1]:
                factors.append("v" if e[-1] == 1 else f"v^{e[-1]}")
            for i, x in enumerate(e[:-1], start=1):
                if x:
                    factors.append(f"z{i}" if x == 1 else f"z{i}^{x}")
            mag = -c if c < 0 else c
            if not factors:
                body = _coeff_str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = _coeff_str(mag) + "*" + "*".join(factors)
            if n == 0:
                pieces.append("-" + body if c < 0 else body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.r}, {str(self)!r})"

    def to_json(self) -> list:
        return [{"coeff": _coeff_str(c), "z": list(e[:-1]), "v": e[-1]}
                for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, r: int, data: Iterable[Mapping]) -> "LaurentPoly":
        out = LaurentPoly.zero(r)
        for t in data:
            out = out + make_monomial(r, t["z"], t["v"], Fraction(t["coeff"]))
        return out


def make_monomial(r: int, z_exponents: Sequence[int], v_exponent: int = 0, coeff=1) -> LaurentPoly:
    if len(z_exponents) != r:
        raise ValueError(f"expected {r} z-exponents, got {len(z_exponents)}")
    c = _as_coeff(coeff)
    if not c:
        return LaurentPoly.zero(r)
    return LaurentPoly._raw(r, {tuple(int(x) for x in z_exponents) + (int(v_exponent),): c})


def arith(op: str, a: LaurentPoly, b: LaurentPoly | None = None) -> LaurentPoly:
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "sub":
        return a - b
    raise ValueError(f"unknown operation {op!r}")


def act_variables(p: LaurentPoly, perm, invert_v: bool = False) -> LaurentPoly:
    """Apply z_i -> z_{w(i)}, so z^mu -> z^{w mu}; perm is one-line or a Permutation."""
    images = getattr(perm, "images", perm)
    return p.act(tuple(images), invert_v)


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return q with q * den == num, or raise NotDivisible.

    Both operands are shifted to genuine polynomials with every minimal
    exponent zero; the Newton polytope of an exact quotient is then the
    difference of the two, so the shifted quotient is a polynomial and lex
    long division either terminates cleanly or hits a non-divisible leading
    monomial.
    """
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = num.r
    if num.is_zero():
        return LaurentPoly.zero(r)
    if den.is_monomial():
        (e, c), = den.terms.items()
        return LaurentPoly._raw(r, {tuple(a - b for a, b in zip(k, e)): _div_coeff(x, c)
                                    for k, x in num.terms.items()})
    nmin, dmin = num.min_exponents(), den.min_exponents()
    rem = {tuple(a - b for a, b in zip(e, nmin)): c for e, c in num.terms.items()}
    dterms = [(tuple(a - b for a, b in zip(e, dmin)), c) for e, c in den.terms.items()]
    lead_e, lead_c = max(dterms)
    rest = [(e, c) for e, c in dterms if e != lead_e]
    quot = {}
    while rem:
        top = max(rem)
        diff = tuple(a - b for a, b in zip(top, lead_e))
        if min(diff) < 0:
            raise NotDivisible(f"{num} is not divisible by {den}")
        q = _div_coeff(rem.pop(top), lead_c)
        quot[diff] = q
        for e, c in rest:
            k = tuple(a + b for a, b in zip(diff, e))
            s = _norm(rem.get(k, 0) - q * c)
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    shift = tuple(a - b for a, b in zip(nmin, dmin))
    return LaurentPoly._raw(r, {tuple(a + b for a, b in zip(e, shift)): c for e, c in quot.items()})


class RationalFn:
    """A quotient num/den of Laurent polynomials, never reduced."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one(num.r)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @property
    def r(self) -> int:
        return self.num.r

    @classmethod
    def zero(cls, r: int) -> "RationalFn":
        return cls(LaurentPoly.zero(r))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RationalFn") -> "RationalFn":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other: "RationalFn") -> "RationalFn":
        return self + (-other)

    def __mul__(self, other) -> "RationalFn":
        if isinstance(other, LaurentPoly):
            return RationalFn(self.num * other, self.den)
        if isinstance(other, (int, Fraction)):
            return RationalFn(self.num * other, self.den)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: "RationalFn") -> "RationalFn":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def act(self, perm, invert_v: bool = False) -> "RationalFn":
        return RationalFn(act_variables(self.num, perm, invert_v), act_variables(self.den, perm, invert_v))

    def substitute_v_power(self, k: int) -> "RationalFn":
        return RationalFn(self.num.substitute_v_power(k), self.den.substitute_v_power(k))

    def to_laurent(self) -> LaurentPoly:
        return divide_exact(self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return rf_equal(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalFn(({self.num}) / ({self.den}))"


def rf_equal(a: RationalFn, b: RationalFn) -> bool:
    return a.num * b.den == b.num * a.den
