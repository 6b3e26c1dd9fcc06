import pytest
from hypothesis import given, settings

from strategies import elements, weak
from wpqsym.element import Element, parse_element
from wpqsym.expansions import (
    F_zero_in_K,
    K_zero_in_M,
    M_zero_in_K,
    UnsupportedConversion,
    closed_form_F_zero_product,
    closed_form_K_zero_product,
    convert,
    expand_F_to_M,
    expand_K_to_F,
    expand_K_to_M,
    gamma_empty,
    k0_f0_basis_change,
    lambda_empty,
    to_F,
    to_M,
)
from wpqsym.products import product
from wpqsym.semantics import same_function


def test_K_to_M_small_cases():
    assert expand_K_to_M((0, 1)) == parse_element("2*M[1] + 4*M[0,1]")
    assert expand_K_to_M((2,)) == parse_element("2*M[2] + 4*M[1,1]")


def test_K_of_equal_classes_agree():
    assert expand_K_to_M((1, 2)) == expand_K_to_M((3,)) == expand_K_to_M((1, 1, 1))


def test_F_to_M_of_zeros():
    assert expand_F_to_M((0, 0)) == parse_element("M[0] + M[0,0]")


def test_zero_subalgebra_closed_forms():
    assert F_zero_in_K(2) == parse_element("1/4*K[0] + 1/4*K[0,0]")
    assert F_zero_in_K(1) == parse_element("1/2*K[0]")
    for r in range(1, 7):
        forms = k0_f0_basis_change(r)
        assert to_M(forms["F->K"]) == expand_F_to_M((0,) * r)
        assert to_M(forms["M->K"]) == Element.gen("M", (0,) * r)
        assert forms["K->M"] == expand_K_to_M((0,) * r) == to_M(Element.gen("K", (0,) * r))
    with pytest.raises(ValueError):
        k0_f0_basis_change(0)
    assert K_zero_in_M(0) == Element.one("M")
    assert M_zero_in_K(0) == Element.one("K")


def test_conversion_into_K_is_restricted():
    assert convert(parse_element("F[0,0]"), "K") == F_zero_in_K(2)
    with pytest.raises(UnsupportedConversion):
        convert(Element.gen("F", (1,)), "K")


def test_enumerators_of_barred_chains():
    m, k = lambda_empty((3,))
    assert k == parse_element("K[0,0,0]")
    assert same_function(m, k)
    m, f = gamma_empty((2, 1))
    assert to_M(f) == m
    with pytest.raises(ValueError):
        lambda_empty((1, 0))


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (4, 2)])
def test_zero_products_match_closed_forms(m, n):
    zf = lambda r: Element.gen("F", (0,) * r)
    zk = lambda r: Element.gen("K", (0,) * r)
    assert product(zf(m), zf(n)) == closed_form_F_zero_product(m, n)
    assert same_function(product(zk(m), zk(n)), closed_form_K_zero_product(m, n))


@given(weak(6))
def test_M_F_round_trip(a):
    m = Element.gen("M", a)
    f = Element.gen("F", a)
    assert to_M(to_F(m)) == m
    assert to_F(to_M(f)) == f


@settings(max_examples=40)
@given(weak(5))
def test_K_to_F_agrees_with_K_to_M(a):
    assert to_M(expand_K_to_F(a)) == expand_K_to_M(a)


@given(elements("F"), elements("F"))
def test_conversion_is_linear(x, y):
    assert to_M(x + y) == to_M(x) + to_M(y)
