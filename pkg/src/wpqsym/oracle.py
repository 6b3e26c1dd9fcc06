"""Brute-force ground truth: truncated series in ``x_1..x_N`` and P-partition
enumerators over chains.

A monomial is stored as a length-``N`` tuple whose entry ``e >= 0`` means
``x_i^e`` occurs and ``-1`` means ``x_i`` is absent, so ``x_1^0`` and ``1``
are different monomials.
"""

from __future__ import annotations

import itertools

from .element import Element
from .expansions import to_M
from .scalar import Q, as_scalar, format_scalar
from .words import PosetWord

ABSENT = -1


class DimensionMismatch(ValueError):
    pass


def _merge(a: tuple, b: tuple) -> tuple:
    return tuple(y if x < 0 else x if y < 0 else x + y for x, y in zip(a, b))


class Series:
    __slots__ = ("N", "_terms")

    def __init__(self, N: int, terms=()):
        self.N = N
        out: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != N:
                raise DimensionMismatch(f"monomial {mono} has wrong length for N={N}")
            out[mono] = out.get(mono, 0) + as_scalar(c)
        self._terms = {k: v for k, v in out.items() if v}

    @classmethod
    def one(cls, N: int) -> "Series":
        return cls(N, {(ABSENT,) * N: 1})

    @classmethod
    def from_sparse(cls, N: int, exps: dict, coeff=1) -> "Series":
        mono = [ABSENT] * N
        for var, e in exps.items():
            mono[var - 1] = e
        return cls(N, {tuple(mono): coeff})

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.N == other.N and self._terms == other._terms

    def __add__(self, other: "Series") -> "Series":
        self._same_n(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return Series(self.N, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "Series":
        c = as_scalar(c)
        return Series(self.N, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other: "Series") -> "Series":
        return series_product(self, other)

    def _same_n(self, other):
        if other.N != self.N:
            raise DimensionMismatch(f"N={self.N} vs N={other.N}")

    def __str__(self):
        return format_series(self)

    def __repr__(self):
        return f"Series({self.N}, {format_series(self)!r})"


def series_product(a: Series, b: Series) -> Series:
    a._same_n(b)
    out: dict = {}
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            k = _merge(m1, m2)
            out[k] = out.get(k, 0) + c1 * c2
    return Series(a.N, out)


def format_monomial(mono: tuple) -> str:
    parts = [f"x{i + 1}^{e}" for i, e in enumerate(mono) if e >= 0]
    return "*".join(parts) if parts else "1"


def format_series(s: Series) -> str:
    if not len(s):
        return "0"
    keys = sorted(s._terms, key=lambda m: [(i, e) for i, e in enumerate(m) if e >= 0])
    out = []
    for idx, m in enumerate(keys):
        c = s._terms[m]
        sign = "-" if c < 0 else ("" if idx == 0 else "+")
        body = f"{format_scalar(abs(c))}*{format_monomial(m)}"
        out.append(f"{sign}{body}" if idx == 0 else f" {sign} {body}")
    return "".join(out)


# -- realisation -----------------------------------------------------------------


def realize_M(alpha, N: int) -> Series:
    alpha = tuple(alpha)
    out = {}
    for idx in itertools.combinations(range(N), len(alpha)):
        mono = [ABSENT] * N
        for i, e in zip(idx, alpha):
            mono[i] = e
        out[tuple(mono)] = Q(1)
    return Series(N, out)


def realize(x: Element, N: int) -> Series:
    m = to_M(x)
    acc: dict = {}
    for alpha, c in m.items():
        for mono, _ in realize_M(alpha, N).items():
            acc[mono] = acc.get(mono, 0) + c
    return Series(N, acc)


# -- enumerators ------------------------------------------------------------------


def _enriched_values(N: int):
    # the order -1 < 1 < -2 < 2 < ... encoded by rank
    vals = []
    for i in range(1, N + 1):
        vals.extend((-i, i))
    return vals


def _descents(w: PosetWord) -> list[bool]:
    labs = w.labels()
    return [a > b for a, b in zip(labs, labs[1:])]


def _weight(w: PosetWord, values, N: int) -> tuple:
    mono = [ABSENT] * N
    for (_, barred), v in zip(w.letters, values):
        i = abs(v) - 1
        add = 0 if barred else 1
        mono[i] = add if mono[i] < 0 else mono[i] + add
    return tuple(mono)


def enumerate_enriched(w: PosetWord, N: int) -> Series:
    """Sum of weights over enriched P-partitions of the chain ``w`` into ``±[N]``.

    Along the chain the values weakly increase in ``-1 < 1 < -2 < 2 < ...``;
    a repeated positive value needs an ascent in the labels and a repeated
    negative value needs a descent.
    """
    vals = _enriched_values(N)
    desc = _descents(w)
    n = len(w)
    out: dict = {}

    def rec(pos, start_rank, chosen):
        if pos == n:
            mono = _weight(w, chosen, N)
            out[mono] = out.get(mono, 0) + 1
            return
        for r in range(start_rank, len(vals)):
            v = vals[r]
            if pos and r == start_rank:
                d = desc[pos - 1]
                if v > 0 and d:
                    continue
                if v < 0 and not d:
                    continue
            chosen.append(v)
            rec(pos + 1, r, chosen)
            chosen.pop()

    rec(0, 0, [])
    return Series(N, out)


def enumerate_ordinary(w: PosetWord, N: int) -> Series:
    """Sum of weights over P-partitions of the chain ``w`` into ``[N]``: weakly
    increasing, strictly at label descents."""
    desc = _descents(w)
    n = len(w)
    out: dict = {}

    def rec(pos, lo, chosen):
        if pos == n:
            mono = _weight(w, chosen, N)
            out[mono] = out.get(mono, 0) + 1
            return
        start = lo + 1 if pos and desc[pos - 1] else lo
        for v in range(max(start, 1), N + 1):
            chosen.append(v)
            rec(pos + 1, v, chosen)
            chosen.pop()

    rec(0, 1, [])
    return Series(N, out)


def exact_n(*elements: Element) -> int:
    """A variable count at which realisations separate elements exactly."""
    longest = 0
    for x in elements:
        for alpha in to_M(x).support():
            longest = max(longest, len(alpha))
    return longest + 1


def lambda_series(alpha, N: int) -> Series:
    from .words import poset_word

    return enumerate_enriched(poset_word(alpha), N)


def gamma_series(alpha, N: int) -> Series:
    from .words import poset_word

    return enumerate_ordinary(poset_word(alpha), N)
