"""The formal span of *all* weak compositions ``K_alpha``, with no ``τ``
identification.

Keys here are kept exactly as the product rewriting and ``Θ`` produce them.
The second Rota-Baxter operator behaves well on this formal span but does not
descend to functions, because ``Phat(K_alpha)`` and ``Phat(K_τ(alpha))`` can
differ even though ``K_alpha`` and ``K_τ(alpha)`` agree.  The helpers below let
the verification suite show both facts side by side.
"""

from __future__ import annotations

from functools import lru_cache

from . import compositions as wc
from .element import Element
from .hopf import Theta_raw_terms
from .rota_baxter import HALF, rb_P
from .semantics import same_function
from .words import product_words, shuffles, word_to_K_raw_terms


def _add(out: dict, key, c) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def _gen_product(a, b) -> tuple:
    left, right = product_words(a, b)
    out: dict = {}
    for w in shuffles(left, right):
        for key, c in word_to_K_raw_terms(w).items():
            _add(out, key, c)
    return tuple(out.items())


def product(x: dict, y: dict) -> dict:
    out: dict = {}
    for a, c in x.items():
        for b, d in y.items():
            if not a or not b:
                _add(out, a or b, c * d)
                continue
            for key, e in _gen_product(a, b):
                _add(out, key, c * d * e)
    return out


def P_hat(x: dict) -> dict:
    out: dict = {}
    for a, c in x.items():
        _add(out, (0,) + a, HALF * c)
        if a:
            _add(out, a, -HALF * c * (2 if a[0] != 0 else 1))
    return out


def Theta(x: Element) -> dict:
    out: dict = {}
    for a, c in x.items():
        for key, u in Theta_raw_terms(a).items():
            _add(out, key, c * u)
    return out


def combine(*parts: dict) -> dict:
    out: dict = {}
    for part in parts:
        for k, v in part.items():
            _add(out, k, v)
    return out


def as_function(x: dict) -> Element:
    """Collapse a raw combination to the function it represents."""
    return Element("K", x)


def rb_identity_holds(a, b) -> bool:
    """Weight-1 identity for ``Phat`` on raw generators, compared as functions."""
    x, y = {tuple(a): 1}, {tuple(b): 1}
    lhs = product(P_hat(x), P_hat(y))
    rhs = combine(P_hat(product(x, P_hat(y))), P_hat(product(P_hat(x), y)), P_hat(product(x, y)))
    return same_function(as_function(lhs), as_function(rhs))


def commutation_holds(alpha) -> bool:
    """``Θ∘P = Phat∘Θ`` on ``F_alpha`` with ``Θ`` and ``Phat`` on raw keys."""
    x = Element.gen("F", alpha)
    return same_function(as_function(Theta(rb_P(x))), as_function(P_hat(Theta(x))))


def well_defined_on(alpha) -> bool:
    """Whether ``Phat`` gives the same function on ``alpha`` and on ``τ(alpha)``."""
    alpha = tuple(alpha)
    t = wc.canonical_form(alpha)
    return same_function(as_function(P_hat({alpha: 1})), as_function(P_hat({t: 1})))
