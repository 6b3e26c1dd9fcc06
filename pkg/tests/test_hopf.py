import pytest
from hypothesis import given, settings

from strategies import weak
from wpqsym import hopf
from wpqsym.element import Element, Tensor, parse_element
from wpqsym.expansions import to_F, to_M
from wpqsym.products import product
from wpqsym.scalar import Q
from wpqsym.semantics import same_function, same_tensor


def gen(basis, *parts):
    return Element.gen(basis, tuple(parts))


def test_coproduct_of_M_deconcatenates():
    got = hopf.coproduct(gen("M", 1, 0, 2))
    one = Element.one("M")
    want = (
        Tensor.of(one, gen("M", 1, 0, 2))
        + Tensor.of(gen("M", 1), gen("M", 0, 2))
        + Tensor.of(gen("M", 1, 0), gen("M", 2))
        + Tensor.of(gen("M", 1, 0, 2), one)
    )
    assert got == want


def test_counit():
    assert hopf.counit(Element.one("M")) == 1
    assert hopf.counit(gen("M", 0)) == 0
    assert hopf.counit(parse_element("3*F[e] + 5*F[2]")) == 3


def test_antipode_of_K():
    assert hopf.antipode(gen("K", 2, 0, 0, 0, 1, 0)) == -gen("K", 0, 1, 0, 0, 0, 1, 1)


def test_antipode_of_zero_indices():
    assert to_F(hopf.antipode(gen("M", 0, 0, 0))) == -gen("F", 0, 0, 0)
    assert to_M(hopf.antipode(gen("F", 0, 0, 0))) == -gen("M", 0, 0, 0)


def test_phi():
    assert hopf.map_phi(gen("M", 0, 2)).is_zero()
    assert hopf.map_phi(gen("M", 1, 0, 2)) == -gen("M", 1, 2)
    assert hopf.map_phi(gen("F", 0, 2, 0)) == -gen("F", 2)


def test_rho():
    assert hopf.map_rho(gen("K", 2)) == gen("K", 2)
    assert hopf.map_rho(gen("K", 0, 2)) == gen("K", 2).scale(2)
    assert hopf.map_rho(gen("K", 1, 0, 2)).is_zero()


def test_Theta_and_pi():
    assert hopf.map_Theta(gen("F", 2, 1)) == gen("K", 2, 1)
    assert hopf.map_Theta(gen("F", 0, 0)) == parse_element("1/4*K[0] + 1/4*K[0,0]")
    assert hopf.map_Theta(gen("F", 0, 1)) == gen("K", 0, 1).scale(Q(1, 2))
    assert hopf.map_pi(gen("F", 0, 0)) == gen("F", 0, 0)
    assert hopf.map_pi(gen("F", 0, 1)).is_zero()
    assert hopf.map_pi(parse_element("K[0,0] + K[2]")) == gen("K", 0, 0)


def test_phi_b_coefficients():
    b = Q(3)
    assert hopf.phi_b_coefficients(2, b) == [b / 2, b**2]
    assert hopf.phi_b_coefficients(1, b) == [b]


def test_phi_b_rejects_non_zero_indices():
    with pytest.raises(ValueError):
        hopf.map_phi_b(gen("F", 0, 1), Q(2))


@pytest.mark.parametrize("n", range(0, 9))
def test_phi_half_is_identity_on_zeros(n):
    x = gen("F", *([0] * n))
    assert to_F(hopf.map_phi_b(x, Q(1, 2))) == x


@settings(max_examples=25, deadline=None)
@given(weak(4))
def test_hopf_axioms_on_F(a):
    x = Element.gen("F", a)
    assert hopf.coassociativity_holds(x)
    assert hopf.counit_laws_hold(x)
    assert same_function(hopf.convolution(x), hopf.unit_counit(x))
    assert same_function(hopf.antipode(hopf.antipode(x)), x)


@settings(max_examples=25, deadline=None)
@given(weak(4))
def test_hopf_axioms_on_K(a):
    x = Element.gen("K", a)
    assert hopf.coassociativity_holds(x)
    assert same_function(hopf.convolution(x), hopf.unit_counit(x))
    assert to_M(hopf.antipode(x)) == hopf.antipode(to_M(x))


@settings(max_examples=20, deadline=None)
@given(weak(2), weak(2))
def test_bialgebra_compatibility(a, b):
    x, y = Element.gen("K", a), Element.gen("K", b)
    lhs = hopf.coproduct(product(x, y))
    rhs = hopf.tensor_product(hopf.coproduct(x), hopf.coproduct(y))
    assert same_tensor(lhs, rhs)


@settings(max_examples=25, deadline=None)
@given(weak(4))
def test_descent_to_peak_square(a):
    x = Element.gen("F", a)
    assert same_function(hopf.map_rho(hopf.map_Theta(x)), hopf.map_theta(hopf.map_phi(x)))
