"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from tspp.ring import LaurentPoly

# exponent slots: r, u, v, w, x1, x2, x3; only u and w may go negative
_SIGNED = (1, 3)


def _exponent(slot):
    lo = -2 if slot in _SIGNED else 0
    return st.integers(lo, 3)


monomials = st.tuples(*[_exponent(s) for s in range(7)])

polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=4).map(LaurentPoly)

int_matrices_3x3 = st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3)

partitions = st.lists(st.integers(1, 8), max_size=8).map(lambda xs: tuple(sorted(xs, reverse=True)))
