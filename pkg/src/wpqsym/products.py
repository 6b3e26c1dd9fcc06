"""Products in the M, F and K bases."""

from __future__ import annotations

from functools import lru_cache

from . import compositions as wc
from .element import BasisMismatch, Element
from .scalar import Q, as_scalar
from .words import product_words, shuffles, word_to_F_terms, word_to_K_terms


def quasi_shuffle(alpha, beta, lam=1) -> dict:
    """The weight-``lam`` mixable shuffle ``alpha *_lam beta`` as ``{gamma: coeff}``.

    ``lam = 1`` gives the quasi-shuffle, ``lam = 0`` the plain shuffle.
    """
    return dict(_qsh(tuple(alpha), tuple(beta), as_scalar(lam)))


@lru_cache(maxsize=None)
def _qsh(a, b, lam) -> tuple:
    if not a:
        return ((b, Q(1)),)
    if not b:
        return ((a, Q(1)),)
    out: dict = {}

    def add(head, rest, scale):
        for g, c in rest:
            k = (head,) + g
            out[k] = out.get(k, 0) + scale * c

    add(a[0], _qsh(a[1:], b, lam), 1)
    add(b[0], _qsh(a, b[1:], lam), 1)
    if lam:
        add(a[0] + b[0], _qsh(a[1:], b[1:], lam), lam)
    return tuple((k, c) for k, c in out.items() if c)


@lru_cache(maxsize=None)
def _m_gen(a, b) -> tuple:
    return tuple(_qsh(a, b, Q(1)))


def _word_product(a, b, rewrite) -> tuple:
    left, right = product_words(a, b)
    out: dict = {}
    for w in shuffles(left, right):
        for g, c in rewrite(w).items():
            out[g] = out.get(g, 0) + c
    return tuple((g, Q(c)) for g, c in out.items() if c)


def _ordered(a, b):
    # the product is commutative; share the cache between (a, b) and (b, a)
    return (a, b) if wc.sort_key(a) <= wc.sort_key(b) else (b, a)


@lru_cache(maxsize=None)
def _f_gen(a, b) -> tuple:
    return _word_product(a, b, word_to_F_terms)


@lru_cache(maxsize=None)
def _k_gen(a, b) -> tuple:
    return _word_product(a, b, word_to_K_terms)


def product_generators(basis: str, a, b) -> dict:
    """``B_a * B_b`` as a term map."""
    a, b = tuple(a), tuple(b)
    if basis == "M":
        return dict(_m_gen(*_ordered(a, b)))
    if basis == "F":
        return dict(_f_gen(*_ordered(a, b)))
    if basis == "K":
        return dict(_k_gen(*_ordered(wc.canonical_form(a), wc.canonical_form(b))))
    raise ValueError(f"unknown basis {basis!r}")


def product(x: Element, y: Element) -> Element:
    if x.basis != y.basis:
        raise BasisMismatch(f"cannot multiply {x.basis} by {y.basis}")
    acc: dict = {}
    for a, c in x.items():
        for b, d in y.items():
            cd = c * d
            for g, e in product_generators(x.basis, a, b).items():
                acc[g] = acc.get(g, 0) + cd * e
    return Element(x.basis, {g: c for g, c in acc.items() if c})


def unchecked_product_F(a, b) -> Element:
    """``F_a * F_b`` without the commutativity shortcut, for testing it."""
    return Element("F", dict(_word_product(tuple(a), tuple(b), word_to_F_terms)))


def unchecked_product_K(a, b) -> Element:
    return Element("K", dict(_word_product(tuple(a), tuple(b), word_to_K_terms)))
