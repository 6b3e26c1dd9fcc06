from hypothesis import given, settings

from strategies import elements, weak
from wpqsym.element import Element, parse_element
from wpqsym.expansions import to_M
from wpqsym.products import product, quasi_shuffle, unchecked_product_F, unchecked_product_K
from wpqsym.semantics import same_function


def test_quasi_shuffle_examples():
    assert quasi_shuffle((0,), (1,), 1) == {(0, 1): 1, (1, 0): 1, (1,): 1}
    assert quasi_shuffle((0,), (1,), 0) == {(0, 1): 1, (1, 0): 1}
    assert quasi_shuffle((2, 0), ()) == {(2, 0): 1}


def test_small_products():
    f0 = Element.gen("F", (0,))
    assert product(f0, f0) == parse_element("2*F[0,0] - F[0]")
    k0 = Element.gen("K", (0,))
    assert same_function(product(k0, k0), parse_element("2*K[0,0]"))


def test_unit():
    for basis in "MFK":
        x = Element.gen(basis, (2, 0, 1))
        assert product(x, Element.one(basis)) == x


@settings(max_examples=30)
@given(weak(3), weak(3))
def test_F_product_agrees_with_M(a, b):
    fa, fb = Element.gen("F", a), Element.gen("F", b)
    assert to_M(product(fa, fb)) == product(to_M(fa), to_M(fb))


@settings(max_examples=30)
@given(weak(3), weak(3))
def test_K_product_agrees_with_M(a, b):
    ka, kb = Element.gen("K", a), Element.gen("K", b)
    assert to_M(product(ka, kb)) == product(to_M(ka), to_M(kb))


@settings(max_examples=30)
@given(weak(3), weak(3))
def test_commutativity_shortcut(a, b):
    assert unchecked_product_F(a, b) == unchecked_product_F(b, a) == product(Element.gen("F", a), Element.gen("F", b))
    assert same_function(unchecked_product_K(a, b), unchecked_product_K(b, a))


@settings(max_examples=25)
@given(elements("M", 2), elements("M", 2), elements("M", 2))
def test_M_product_is_associative_and_distributive(x, y, z):
    assert product(product(x, y), z) == product(x, product(y, z))
    assert product(x, y + z) == product(x, y) + product(x, z)
