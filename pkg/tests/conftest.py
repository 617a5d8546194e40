from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from iwahori_lattice.exactpoly import LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))


def laurent(r, max_terms=4, zlo=-2, zhi=3, vlo=-1, vhi=2, polynomial=False):
    lo = 0 if polynomial else zlo
    key = st.tuples(*([st.integers(lo, zhi)] * r), st.integers(0 if polynomial else vlo, vhi))
    return st.dictionaries(key, coeffs, max_size=max_terms).map(lambda d: LaurentPoly(r, d))


def nonzero_laurent(r, **kw):
    return laurent(r, **kw).filter(lambda p: not p.is_zero())


def as_fraction(c):
    return Fraction(c)
