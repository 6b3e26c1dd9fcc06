import pytest
from hypothesis import given, settings

from strategies import weak
from wpqsym import oracle
from wpqsym.element import Element, parse_element
from wpqsym.products import quasi_shuffle
from wpqsym.words import poset_word


def test_realize_M():
    assert oracle.format_series(oracle.realize_M((0,), 2)) == "1*x1^0 + 1*x2^0"
    assert oracle.realize_M((), 5) == oracle.Series.one(5)
    assert oracle.format_series(oracle.realize_M((1, 2), 2)) == "1*x1^1*x2^2"
    assert oracle.realize_M((1, 2, 0), 2).items() == oracle.Series(2).items()


def test_explicit_zero_exponent_is_kept():
    x0 = oracle.Series.from_sparse(2, {1: 0})
    x1 = oracle.Series.from_sparse(2, {1: 1})
    assert x0 * x1 == x1
    assert x0 != oracle.Series.one(2)
    assert x1 * oracle.Series.one(2) == x1


def test_series_product_matches_quasi_shuffle():
    lhs = oracle.realize_M((0,), 3) * oracle.realize_M((1,), 3)
    rhs = oracle.realize(Element("M", quasi_shuffle((0,), (1,), 1)), 3)
    assert lhs == rhs


def test_dimension_mismatch():
    with pytest.raises(oracle.DimensionMismatch):
        oracle.Series.one(2) * oracle.Series.one(3)


def test_enumerators_of_small_words():
    assert oracle.enumerate_enriched(poset_word(()), 3) == oracle.Series.one(3)
    assert oracle.enumerate_ordinary(poset_word((0, 0)), 3) == oracle.realize(parse_element("M[0] + M[0,0]"), 3)
    assert oracle.format_series(oracle.lambda_series((0,), 2)) == "2*x1^0 + 2*x2^0"


def test_exact_n():
    assert oracle.exact_n(Element.gen("M", (1, 0, 2))) == 4
    assert oracle.exact_n(Element.gen("F", (0, 1))) == 3


@settings(max_examples=25, deadline=None)
@given(weak(4))
def test_enumerations_match_expansions(a):
    w = poset_word(a)
    assert oracle.enumerate_enriched(w, 3) == oracle.realize(Element.gen("K", a), 3)
    assert oracle.enumerate_ordinary(w, 3) == oracle.realize(Element.gen("F", a), 3)
