from hypothesis import strategies as st

from wpqsym.element import Element
from wpqsym.scalar import Q


def weak(max_total=4):
    """Weak compositions with total weight at most ``max_total``."""

    def fits(a):
        return sum(a) + a.count(0) <= max_total

    return st.lists(st.integers(0, max_total), max_size=max_total).map(tuple).filter(fits)


def scalars():
    return st.builds(Q, st.integers(-6, 6), st.integers(1, 5))


def elements(basis, max_total=3, max_terms=3):
    return st.dictionaries(weak(max_total), scalars(), max_size=max_terms).map(
        lambda d: Element(basis, d)
    )
