"""Coproducts, counit, antipodes, and the maps between the descent and peak
sides."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import compositions as wc
from .element import BasisMismatch, Element, Tensor, linear
from .expansions import convert
from .products import product, product_generators
from .scalar import Q, Scalar, as_scalar, ibinom


@dataclass(frozen=True)
class SplitPair:
    left: tuple
    right: tuple
    kind: str  # "concat" or "near"


def splits(alpha, with_near: bool = True) -> list[SplitPair]:
    alpha = tuple(alpha)
    out = [SplitPair(alpha[:k], alpha[k:], "concat") for k in range(len(alpha) + 1)]
    if with_near:
        for i, s in enumerate(alpha):
            for a in range(1, s):
                out.append(SplitPair(alpha[:i] + (a,), (s - a,) + alpha[i + 1 :], "near"))
    return out


def _coproduct_gen(basis, alpha) -> dict:
    out: dict = {}
    for sp in splits(alpha, with_near=basis != "M"):
        a, b = sp.left, sp.right
        if basis == "K":
            a, b = wc.canonical_form(a), wc.canonical_form(b)
        out[(a, b)] = out.get((a, b), 0) + 1
    return out


def coproduct(x: Element) -> Tensor:
    acc: dict = {}
    for alpha, c in x.items():
        for key, n in _coproduct_gen(x.basis, alpha).items():
            acc[key] = acc.get(key, 0) + c * n
    return Tensor(x.basis, acc)


def counit(x: Element) -> Scalar:
    return x.coeff(())


def tensor_product(s: Tensor, t: Tensor) -> Tensor:
    """Componentwise product on ``A ⊗ A``."""
    if s.basis != t.basis:
        raise BasisMismatch("tensor factors must share a basis")
    acc: dict = {}
    for (a, b), c in s.items():
        for (a2, b2), d in t.items():
            left = product_generators(s.basis, a, a2)
            right = product_generators(s.basis, b, b2)
            for g, e in left.items():
                for h, f in right.items():
                    acc[(g, h)] = acc.get((g, h), 0) + c * d * e * f
    return Tensor(s.basis, acc)


def tensor_multiply(t: Tensor) -> Element:
    """``mu``: ``a ⊗ b -> a * b``."""
    acc: dict = {}
    for (a, b), c in t.items():
        for g, e in product_generators(t.basis, a, b).items():
            acc[g] = acc.get(g, 0) + c * e
    return Element(t.basis, acc)


# -- antipodes -------------------------------------------------------------------


def _per_part_zero_runs(alpha):
    """``(i_1, ..., i_{k+1})`` and ``(s_1, ..., s_k)`` around each positive part."""
    runs, parts, z = [], [], 0
    for p in alpha:
        if p == 0:
            z += 1
        else:
            runs.append(z)
            parts.append(p)
            z = 0
    runs.append(z)
    return runs, parts


def _interleave(runs, parts):
    out = [0] * runs[0]
    for s, z in zip(parts, runs[1:]):
        out.append(s)
        out.extend([0] * z)
    return tuple(out)


@lru_cache(maxsize=None)
def _antipode_M(alpha) -> dict:
    sign = (-1) ** len(alpha)
    out: dict = {}
    for beta in wc.coarsenings(alpha[::-1]):
        out[beta] = out.get(beta, 0) + sign
    return {k: Q(c) for k, c in out.items() if c}


@lru_cache(maxsize=None)
def _antipode_F(alpha) -> dict:
    t = wc.transpose(alpha)
    runs, parts = _per_part_zero_runs(t)
    choices = [[0] if i == 0 else range(1, i + 1) for i in runs]
    out = {}
    for js in itertools.product(*choices):
        d = 1
        for i, j in zip(runs, js):
            d *= ibinom(i - 1, j - 1)
        beta = _interleave(js, parts)
        out[beta] = Q((-1) ** wc.total_weight(beta) * d)
    return out


def _antipode_K(alpha) -> dict:
    return {wc.canonical_form(wc.transpose(alpha)): Q((-1) ** wc.total_weight(alpha))}


_ANTIPODE = {"M": _antipode_M, "F": _antipode_F, "K": _antipode_K}


def antipode(x: Element) -> Element:
    return linear(x.basis, _ANTIPODE[x.basis], x)


def antipode_M_original_order(alpha) -> Element:
    """The alternative reading that coarsens ``alpha`` before reversing."""
    sign = (-1) ** len(alpha)
    out: dict = {}
    for beta in wc.coarsenings(tuple(alpha)):
        out[beta] = out.get(beta, 0) + sign
    return Element("M", out)


# -- maps -------------------------------------------------------------------------


def _phi_M(alpha) -> dict:
    if alpha and alpha[0] == 0:
        return {}
    return {wc.bar(alpha): Q((-1) ** wc.zero_length(alpha))}


def _strip_zeros(alpha):
    """Return ``(i, core, j)`` with ``alpha = 0^i core 0^j``, core zero-free, or ``None``."""
    i = 0
    while i < len(alpha) and alpha[i] == 0:
        i += 1
    j = 0
    while j < len(alpha) - i and alpha[len(alpha) - 1 - j] == 0:
        j += 1
    core = alpha[i : len(alpha) - j]
    if not core or 0 in core:
        return None
    return i, core, j


def _phi_F(alpha) -> dict:
    if not alpha:
        return {(): Q(1)}
    parsed = _strip_zeros(alpha)
    if parsed is None:
        return {}
    _, core, j = parsed
    if j > 1:
        return {}
    return {core: Q((-1) ** j)}


def map_phi(x: Element) -> Element:
    if x.basis == "M":
        return linear("M", _phi_M, x)
    if x.basis == "F":
        return linear("F", _phi_F, x)
    raise BasisMismatch("phi is defined on the M and F bases")


def _rho_K(alpha) -> dict:
    if not alpha:
        return {(): Q(1)}
    parsed = _strip_zeros(alpha)
    if parsed is None:
        return {}
    i, core, j = parsed
    return {core: Q((-1) ** j * 2 ** (2 - (i == 0) - (j == 0)))}


def map_rho(x: Element) -> Element:
    if x.basis != "K":
        raise BasisMismatch("rho is defined on the K basis")
    return linear("K", _rho_K, x)


@lru_cache(maxsize=None)
def Theta_raw_terms(alpha) -> dict:
    """``Θ(F_alpha)`` with keys left as produced (not reduced by ``τ``)."""
    runs, parts = _per_part_zero_runs(alpha)
    scale = Q(1, 2 ** wc.zero_length(alpha))
    choices = [[0] if i == 0 else range(1, i + 1) for i in runs]
    out: dict = {}
    for js in itertools.product(*choices):
        u = 1
        for i, j in zip(runs, js):
            u *= ibinom(i - 1, j - 1)
        key = _interleave(js, parts)
        out[key] = out.get(key, 0) + scale * u
    return {k: c for k, c in out.items() if c}


def _Theta_F(alpha) -> dict:
    out: dict = {}
    for key, c in Theta_raw_terms(alpha).items():
        key = wc.canonical_form(key)
        out[key] = out.get(key, 0) + c
    return {k: c for k, c in out.items() if c}


def map_Theta(x: Element) -> Element:
    if x.basis != "F":
        raise BasisMismatch("Theta is defined on the F basis")
    return linear("K", _Theta_F, x)


def map_theta(x: Element) -> Element:
    """Descent-to-peak map on the composition-indexed part: ``F_alpha -> K_alpha``."""
    if x.basis != "F":
        raise BasisMismatch("theta is defined on the F basis")
    bad = [a for a in x.support() if 0 in a]
    if bad:
        raise ValueError(f"theta needs composition indices, got {wc.format_composition(bad[0])}")
    return Element("K", dict(x.items()))


def map_pi(x: Element) -> Element:
    if x.basis not in ("F", "K"):
        raise BasisMismatch("pi is defined on the F and K bases")
    return Element(x.basis, {a: c for a, c in x.items() if wc.is_zeros(a)})


def phi_b_coefficients(n: int, b) -> list[Scalar]:
    """``[b_{n1}, ..., b_{nn}]``."""
    b = as_scalar(b)
    if n == 0:
        return []
    row = {1: b}  # row n = 1
    for m in range(1, n):
        get = lambda j: Q(1 if m == 0 and j == 0 else 0) if j < 1 or j > m else row[j]
        row = {
            j: (m * get(j) + j * b * (get(j - 1) - get(j + 1))) / (m + 1) for j in range(1, m + 2)
        }
    return [row[j] for j in range(1, n + 1)]


def map_phi_b(x: Element, b) -> Element:
    if x.basis != "F":
        raise BasisMismatch("phi_b is defined on the F basis")
    bad = [a for a in x.support() if not wc.is_zeros(a)]
    if bad:
        raise ValueError(
            f"phi_b is defined on the zero subalgebra, got index {wc.format_composition(bad[0])}"
        )

    def fn(alpha):
        r = len(alpha)
        if r == 0:
            return {(): Q(1)}
        return {(0,) * i: c for i, c in enumerate(phi_b_coefficients(r, b), start=1) if c}

    return linear("K", fn, x)


# -- law checks used by tests and verification -----------------------------------------


def coassociativity_holds(x: Element) -> bool:
    d = coproduct(x)
    left = _expand_left(d)
    right = _expand_right(d)
    return left == right


def _expand_left(d: Tensor) -> dict:
    acc: dict = {}
    for (a, b), c in d.items():
        for (a1, a2), e in _coproduct_gen(d.basis, a).items():
            k = (a1, a2, b)
            acc[k] = acc.get(k, 0) + c * e
    return {k: v for k, v in acc.items() if v}


def _expand_right(d: Tensor) -> dict:
    acc: dict = {}
    for (a, b), c in d.items():
        for (b1, b2), e in _coproduct_gen(d.basis, b).items():
            k = (a, b1, b2)
            acc[k] = acc.get(k, 0) + c * e
    return {k: v for k, v in acc.items() if v}


def counit_laws_hold(x: Element) -> bool:
    d = coproduct(x)
    left: dict = {}
    right: dict = {}
    for (a, b), c in d.items():
        if a == ():
            left[b] = left.get(b, 0) + c
        if b == ():
            right[a] = right.get(a, 0) + c
    target = dict(x.items())
    clean = lambda m: {k: v for k, v in m.items() if v}
    return clean(left) == target and clean(right) == target


def convolution(x: Element) -> Element:
    """``mu ∘ (S ⊗ id) ∘ Delta``."""
    acc = Element(x.basis)
    for (a, b), c in coproduct(x).items():
        acc = acc + product(antipode(Element.gen(x.basis, a)), Element.gen(x.basis, b)).scale(c)
    return acc


def convolution_right(x: Element) -> Element:
    """``mu ∘ (id ⊗ S) ∘ Delta``."""
    acc = Element(x.basis)
    for (a, b), c in coproduct(x).items():
        acc = acc + product(Element.gen(x.basis, a), antipode(Element.gen(x.basis, b))).scale(c)
    return acc


def unit_counit(x: Element) -> Element:
    return Element(x.basis, {(): counit(x)})


def maps_tensor(t: Tensor, fn) -> Tensor:
    return t.apply(fn, fn)
