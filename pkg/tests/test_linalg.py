from hypothesis import given
from hypothesis import strategies as st

from wpqsym import linalg
from wpqsym.scalar import Q


def test_rank_and_pivots():
    rows = [{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 1, 2: 1}]
    assert linalg.rank(rows) == 2
    basis, kept = linalg.echelon(rows)
    assert kept == [0, 2]
    assert all(basis[c][c] == 1 for c in basis)


def test_in_span_and_reduce():
    basis, _ = linalg.echelon([{0: 1, 1: 1}, {1: 1}])
    assert linalg.in_span(basis, {0: 3, 1: -2})
    assert not linalg.in_span(basis, {2: 1})
    assert linalg.reduce(basis, {0: 1, 2: 5}) == {2: 5}


def test_eliminator_solves_exactly():
    cols = [{"a": 1, "b": 1}, {"b": 2}, {"c": Q(1, 3)}]
    elim = linalg.Eliminator(cols)
    sol = elim.solve({"a": 2, "b": 8, "c": 1})
    assert sol == {0: 2, 1: 3, 2: 3}
    assert elim.solve({"d": 1}) is None
    assert elim.solve({}) == {}


_row = st.dictionaries(st.integers(0, 4), st.integers(-3, 3), max_size=4)


@given(st.lists(_row, max_size=5), st.lists(st.integers(-2, 2), min_size=5, max_size=5))
def test_combination_of_columns_is_recovered(cols, coeffs):
    target: dict = {}
    for c, col in zip(coeffs, cols):
        for k, v in col.items():
            target[k] = target.get(k, 0) + c * v
    sol = linalg.Eliminator(cols).solve(target)
    assert sol is not None
    back: dict = {}
    for i, c in sol.items():
        for k, v in cols[i].items():
            back[k] = back.get(k, 0) + c * v
    assert {k: v for k, v in back.items() if v} == {k: v for k, v in target.items() if v}
