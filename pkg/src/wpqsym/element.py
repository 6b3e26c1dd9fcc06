"""Sparse linear combinations in the M, F and K bases, and their tensors."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from . import compositions as wc
from .scalar import Q, Scalar, as_scalar, format_scalar

BASES = ("M", "F", "K")


class BasisMismatch(ValueError):
    pass


def _normalise(basis: str, terms) -> dict:
    out: dict = {}
    items = terms.items() if isinstance(terms, Mapping) else terms
    for key, c in items:
        key = wc.make(key)
        if basis == "K":
            key = wc.canonical_form(key)
        out[key] = out.get(key, 0) + as_scalar(c)
    return {k: c for k, c in out.items() if c}


class Element:
    """An immutable finite linear combination ``sum c_alpha B_alpha``.

    Coefficients are exact rationals (``Q``).  In the K basis every key is replaced by
    its canonical form, so two elements are equal exactly when their term
    maps agree.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms=()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self._terms = _normalise(basis, terms)

    @classmethod
    def _raw(cls, basis: str, terms: dict) -> "Element":
        # trusted constructor: keys already canonical, coefficients nonzero Q
        obj = cls.__new__(cls)
        obj.basis = basis
        obj._terms = terms
        return obj

    @classmethod
    def gen(cls, basis: str, alpha, coeff=1) -> "Element":
        return cls(basis, {tuple(alpha): coeff})

    @classmethod
    def one(cls, basis: str) -> "Element":
        return cls(basis, {(): 1})

    @classmethod
    def zero(cls, basis: str) -> "Element":
        return cls(basis)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, alpha) -> Scalar:
        key = tuple(alpha)
        if self.basis == "K":
            key = wc.canonical_form(key)
        return self._terms.get(key, Q(0))

    def support(self):
        return sorted(self._terms, key=wc.sort_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check(self, other: "Element"):
        if not isinstance(other, Element):
            return NotImplemented
        if other.basis != self.basis:
            raise BasisMismatch(f"cannot combine {self.basis} with {other.basis}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Element._raw(self.basis, out)

    def __neg__(self):
        return Element._raw(self.basis, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Element":
        c = as_scalar(c)
        if not c:
            return Element(self.basis)
        return Element._raw(self.basis, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            from .products import product

            return product(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        return hash((self.basis, frozenset(self._terms.items())))

    def map_terms(self, fn) -> "Element":
        """Linear extension of ``fn(alpha) -> Element``."""
        acc = None
        for alpha, c in self._terms.items():
            img = fn(alpha).scale(c)
            acc = img if acc is None else acc + img
        return acc

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({format_element(self)!r})"


def linear(basis: str, fn, x: Element) -> Element:
    """Apply ``fn`` termwise; the result lives in ``basis`` (zero if ``x`` is zero)."""
    acc: dict = {}
    for alpha, c in x.items():
        for beta, d in fn(alpha).items():
            v = acc.get(beta, 0) + c * d
            if v:
                acc[beta] = v
            else:
                acc.pop(beta, None)
    return Element._raw(basis, acc)


class Tensor:
    """A finite linear combination of ``B_alpha ⊗ B_beta`` over one basis."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms=()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        out: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            a, b = wc.make(a), wc.make(b)
            if basis == "K":
                a, b = wc.canonical_form(a), wc.canonical_form(b)
            out[(a, b)] = out.get((a, b), 0) + as_scalar(c)
        self._terms = {k: c for k, c in out.items() if c}

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __add__(self, other: "Tensor") -> "Tensor":
        if other.basis != self.basis:
            raise BasisMismatch(f"cannot combine {self.basis} with {other.basis}")
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Tensor(self.basis, out)

    def __neg__(self):
        return Tensor(self.basis, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Tensor":
        c = as_scalar(c)
        return Tensor(self.basis, {k: c * v for k, v in self._terms.items()})

    @classmethod
    def of(cls, x: Element, y: Element) -> "Tensor":
        if x.basis != y.basis:
            raise BasisMismatch("tensor factors must share a basis")
        return cls(
            x.basis, {(a, b): c * d for a, c in x.items() for b, d in y.items()}
        )

    def apply(self, left, right) -> "Tensor":
        """``(left ⊗ right)(self)`` for linear maps given as Element -> Element."""
        acc = None
        for (a, b), c in self._terms.items():
            la = left(Element.gen(self.basis, a))
            rb = right(Element.gen(self.basis, b))
            t = Tensor.of(la, rb).scale(c)
            acc = t if acc is None else acc + t
        if acc is None:
            return Tensor(self.basis)
        return acc

    def __str__(self):
        return format_tensor(self)

    def __repr__(self):
        return f"Tensor({format_tensor(self)!r})"


# -- text form -------------------------------------------------------------------


def _join(pieces: list[tuple[Scalar, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for idx, (c, body) in enumerate(pieces):
        mag = format_scalar(abs(c))
        if idx == 0:
            out.append(("-" if c < 0 else "") + f"{mag}*{body}")
        else:
            out.append((" - " if c < 0 else " + ") + f"{mag}*{body}")
    return "".join(out)


def format_element(x: Element) -> str:
    fmt = wc.format_composition
    return _join([(x._terms[a], f"{x.basis}[{fmt(a)}]") for a in x.support()])


def format_tensor(t: Tensor) -> str:
    fmt = wc.format_composition
    keys = sorted(t._terms, key=lambda ab: (wc.sort_key(ab[0]), wc.sort_key(ab[1])))
    return _join(
        [(t._terms[(a, b)], f"{t.basis}[{fmt(a)}]⊗{t.basis}[{fmt(b)}]") for a, b in keys]
    )


class ElementParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text, self.pos, self.expected = text, pos, expected
        super().__init__(f"parse error at position {pos} in {text!r}: expected {expected}")


_COEF = re.compile(r"(\d+)(?:/(\d+))?\s*\*")
_GEN = re.compile(r"([MFK])\[([^\]]*)\]")


def _skip(s: str, pos: int) -> int:
    while pos < len(s) and s[pos].isspace():
        pos += 1
    return pos


def parse_element(text: str) -> Element:
    """Inverse of :func:`format_element` for nonzero elements.

    Terms are ``c*B[...]`` joined by signs; the ``c*`` prefix is optional and
    all terms must use the same basis letter.
    """
    s, n = text, len(text)
    pos = _skip(s, 0)
    basis = None
    terms: list = []
    first = True
    while True:
        sign = 1
        if pos < n and s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos = _skip(s, pos + 1)
        elif not first:
            raise ElementParseError(text, pos, "'+' or '-'")
        coef = Q(1)
        m = _COEF.match(s, pos)
        if m:
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ElementParseError(text, m.start(2), "a nonzero denominator")
            coef = Q(int(m.group(1)), den)
            pos = _skip(s, m.end())
        m = _GEN.match(s, pos)
        if m is None:
            if pos < len(s) and s[pos] in "MFK" and s[pos + 1 : pos + 2] == "[":
                raise ElementParseError(text, len(s), "']'")
            raise ElementParseError(text, pos, "a generator M[...], F[...] or K[...]")
        if basis is None:
            basis = m.group(1)
        elif m.group(1) != basis:
            raise ElementParseError(text, pos, f"basis {basis}")
        try:
            alpha = wc.parse_composition(m.group(2))
        except wc.ParseError as exc:
            raise ElementParseError(text, m.start(2) + exc.pos, exc.expected) from None
        terms.append((alpha, sign * coef))
        pos = _skip(s, m.end())
        if pos >= n:
            break
        first = False
    return Element(basis, terms)


def parse_element_in(basis: str, text: str) -> Element:
    """Like :func:`parse_element` but also accepts ``"0"``."""
    if text.strip() == "0":
        return Element(basis)
    x = parse_element(text)
    if x.basis != basis:
        raise BasisMismatch(f"expected basis {basis}, got {x.basis}")
    return x


def gens(basis: str, alphas: Iterable) -> list[Element]:
    return [Element.gen(basis, a) for a in alphas]
