"""Change-of-basis engines between M, F and K, plus the closed forms on the
zero subalgebra."""

from __future__ import annotations

from functools import lru_cache

from . import compositions as wc
from .element import Element, linear
from .scalar import Q, binom, ibinom


def refinement_coefficient(alpha, js) -> int:
    """``c_{alpha beta}`` from the zero runs ``js`` of ``beta`` aligned to ``alpha``."""
    iz = wc.block_structure(alpha).zero_runs
    c = 1
    for i, j in zip(iz[:-1], js[:-1]):
        c *= ibinom(i, j)
    return c * ibinom(iz[-1] - 1, js[-1] - 1)


@lru_cache(maxsize=None)
def _f_to_m(alpha) -> dict:
    out = {}
    for beta, js in wc.lower_interval(alpha):
        c = refinement_coefficient(alpha, js)
        if c:
            out[beta] = Q(c)
    return out


@lru_cache(maxsize=None)
def _m_to_f(alpha) -> dict:
    ell = len(alpha)
    out = {}
    for beta, js in wc.lower_interval(alpha):
        c = refinement_coefficient(alpha, js)
        if c:
            out[beta] = Q((-1) ** (len(beta) - ell) * c)
    return out


@lru_cache(maxsize=None)
def _k_to_m(alpha) -> dict:
    return {
        beta: Q(n * 2 ** len(beta))
        for beta, n in wc.mutation_decompositions(alpha).items()
    }


@lru_cache(maxsize=None)
def _k_to_f(alpha) -> dict:
    return linear("F", _m_to_f, Element._raw("M", _k_to_m(alpha))).terms


def K_to_F_outside_support(alpha) -> list:
    """F-indices of ``K_alpha`` that are not ``⊩ alpha`` (expected empty)."""
    return [b for b in expand_K_to_F(alpha).support() if not wc.vdash(b, wc.canonical_form(tuple(alpha)))]


def expand_F_to_M(alpha) -> Element:
    return Element._raw("M", dict(_f_to_m(tuple(alpha))))


def expand_M_to_F(alpha) -> Element:
    return Element._raw("F", dict(_m_to_f(tuple(alpha))))


def expand_K_to_M(alpha) -> Element:
    return Element._raw("M", dict(_k_to_m(wc.canonical_form(tuple(alpha)))))


def expand_K_to_F(alpha) -> Element:
    return Element._raw("F", dict(_k_to_f(wc.canonical_form(tuple(alpha)))))


_TO = {
    ("F", "M"): _f_to_m,
    ("M", "F"): _m_to_f,
    ("K", "M"): _k_to_m,
    ("K", "F"): _k_to_f,
}


class UnsupportedConversion(ValueError):
    pass


def convert(x: Element, target: str) -> Element:
    """Rewrite ``x`` in ``target``.

    Conversions into K are only offered on the zero subalgebra, where the
    closed inverse is known.
    """
    if x.basis == target:
        return x
    if target == "K":
        return _zero_part_to_K(x)
    return linear(target, _TO[(x.basis, target)], x)


def to_M(x: Element) -> Element:
    return convert(x, "M")


def to_F(x: Element) -> Element:
    return convert(x, "F")


def _zero_part_to_K(x: Element) -> Element:
    bad = [a for a in x.support() if not wc.is_zeros(a)]
    if bad:
        raise UnsupportedConversion(
            f"conversion to K is only available for 0^r indices, got {wc.format_composition(bad[0])}"
        )
    table = F_zero_in_K if x.basis == "F" else M_zero_in_K

    def fn(alpha):
        return table(len(alpha)).terms

    return linear("K", fn, x)


# -- zero subalgebra -------------------------------------------------------------


def F_zero_in_K(r: int) -> Element:
    if r == 0:
        return Element.one("K")
    return Element(
        "K", {(0,) * i: Q(ibinom(r - 1, i - 1), 2**r) for i in range(1, r + 1)}
    )


def M_zero_in_K(r: int) -> Element:
    if r == 0:
        return Element.one("K")
    return Element(
        "K",
        {
            (0,) * i: Q((-1) ** (r - i) * ibinom(r - 1, i - 1), 2**r)
            for i in range(1, r + 1)
        },
    )


def K_zero_in_M(r: int) -> Element:
    if r == 0:
        return Element.one("M")
    return Element("M", {(0,) * j: 2**j * ibinom(r - 1, j - 1) for j in range(1, r + 1)})


def k0_f0_basis_change(r: int) -> dict[str, Element]:
    """The three closed expansions for index ``0^r``, keyed ``"F->K"``,
    ``"M->K"`` and ``"K->M"``."""
    if r < 1:
        raise ValueError("r must be positive")
    return {"F->K": F_zero_in_K(r), "M->K": M_zero_in_K(r), "K->M": K_zero_in_M(r)}


def closed_form_F_zero_product(m: int, n: int) -> Element:
    if m < 1 or n < 1:
        raise ValueError("closed forms need m, n >= 1; use the unit otherwise")
    return Element(
        "F",
        {
            (0,) * (m + n - j): (-1) ** j * binom(m, j) * binom(m + n - j, m)
            for j in range(m + 1)
        },
    )


def closed_form_K_zero_product(m: int, n: int) -> Element:
    if m < 1 or n < 1:
        raise ValueError("closed forms need m, n >= 1; use the unit otherwise")
    terms: dict = {}
    for k in range(m + 1):
        c = (-1) ** k * binom(m + n - k, m) * binom(m, k) * Q(m + n - 2 * k, m + n - k)
        key = (0,) * (m + n - 2 * k)
        terms[key] = terms.get(key, 0) + c
    return Element("K", terms)


def _check_gamma(gamma):
    gamma = tuple(gamma)
    if not gamma or 0 in gamma:
        raise ValueError("expected a nonempty composition without zeros")
    return gamma


def lambda_empty(gamma) -> tuple[Element, Element]:
    """M- and K-expansions of the enriched enumerator of a fully barred chain
    with descent composition ``gamma``."""
    gamma = _check_gamma(gamma)
    n, p = sum(gamma), len(wc.peak_set(gamma))
    m_terms = {}
    for j in range(1, n + 1):
        mj = sum(
            binom(n - 2 * p - 1, i + j - 2 * p - 1) * binom(p, i) * 2**i for i in range(p + 1)
        )
        if mj:
            m_terms[(0,) * j] = mj * 2**j
    k_terms = {(0,) * (n - 2 * k): (-1) ** k * binom(p, k) for k in range(p + 1)}
    return Element("M", m_terms), Element("K", k_terms)


def gamma_empty(gamma) -> tuple[Element, Element]:
    """M- and F-expansions of the ordinary enumerator of a fully barred chain."""
    gamma = _check_gamma(gamma)
    n, ell = sum(gamma), len(gamma)
    m_terms = {(0,) * j: binom(n - ell, j - ell) for j in range(ell, n + 1)}
    f_terms = {(0,) * (n - j): (-1) ** j * binom(ell - 1, j) for j in range(ell)}
    return Element("M", m_terms), Element("F", f_terms)
