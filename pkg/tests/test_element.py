import pytest
from hypothesis import given

from strategies import elements
from wpqsym.element import BasisMismatch, Element, ElementParseError, Tensor, parse_element
from wpqsym.scalar import Q


def test_zero_coefficients_are_dropped():
    x = Element("M", {(1,): 2, (0,): 0})
    assert list(x.support()) == [(1,)]
    assert (x - x).is_zero()


def test_arithmetic_and_coefficients():
    x = parse_element("2*F[0,1] - 1/3*F[1]")
    assert x.coeff((0, 1)) == 2
    assert x.coeff((1,)) == Q(-1, 3)
    assert x.coeff((2,)) == 0
    assert (x + x) == x.scale(2) == 2 * x


def test_mixed_bases_are_rejected():
    with pytest.raises(BasisMismatch):
        Element.gen("M", (1,)) + Element.gen("F", (1,))


def test_parser_positions():
    with pytest.raises(ElementParseError) as exc:
        parse_element("2*K[0,1]+K[1")
    assert "position 12" in str(exc.value)


def test_empty_index_and_zero():
    assert parse_element("3*M[e]") == Element.one("M").scale(3)
    assert str(Element.zero("K")) == "0"


def test_tensor_collects_terms():
    t = Tensor.of(Element.gen("M", (1,)), Element.one("M"))
    assert (t + t).scale(Q(1, 2)) == t
    assert (t - t).terms == {}


@given(elements("F"))
def test_format_parse_round_trip(x):
    if x.is_zero():
        assert str(x) == "0"
    else:
        assert parse_element(str(x)) == x
