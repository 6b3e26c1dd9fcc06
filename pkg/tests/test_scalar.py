from fractions import Fraction

import gmpy2
import pytest

from wpqsym.scalar import Q, as_scalar, binom, format_scalar, ibinom, parse_scalar


@pytest.mark.parametrize("i,j,want", [(3, 5, 0), (4, 2, 6), (-1, -1, 1), (0, 0, 1), (5, -1, 0)])
def test_binom(i, j, want):
    assert binom(i, j) == want
    assert ibinom(i, j) == want


def test_as_scalar_promotes_exact_types():
    assert as_scalar(3) == Q(3)
    assert as_scalar(Fraction(2, 6)) == Q(1, 3)
    assert as_scalar(gmpy2.mpz(7)) == 7
    assert type(as_scalar(5)) is type(Q(5))


@pytest.mark.parametrize("bad", [0.5, True])
def test_as_scalar_rejects_inexact(bad):
    with pytest.raises(TypeError):
        as_scalar(bad)


def test_mpq_interoperates_with_fraction():
    assert Q(1, 2) == Fraction(1, 2)
    assert hash(Q(1, 2)) == hash(Fraction(1, 2))


@pytest.mark.parametrize("text,want", [("3", Q(3)), ("-3/5", Q(-3, 5)), (" 4/6 ", Q(2, 3))])
def test_parse_scalar(text, want):
    assert parse_scalar(text) == want


@pytest.mark.parametrize("text", ["", "1/0", "x", "1.5"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_format_scalar():
    assert format_scalar(Q(-3, 6)) == "-1/2"
    assert format_scalar(Q(4)) == "4"
