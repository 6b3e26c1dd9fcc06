"""Exact rational scalars and the extended binomial convention.

Coefficients everywhere in the package are ``gmpy2.mpq`` values (exported as
``Q``).  Integers and :class:`fractions.Fraction` values are accepted on input
and promoted; ``mpq`` compares and hashes equal to the matching ``Fraction``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from gmpy2 import mpq, mpz

Q = mpq
Scalar = mpq

ZERO = Q(0)
ONE = Q(1)

_SCALAR_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def as_scalar(value) -> Scalar:
    if type(value) is mpq:
        return value
    if isinstance(value, bool) or not isinstance(value, (int, Fraction, mpz)):
        raise TypeError(f"not an exact rational: {value!r}")
    return Q(value)


def binom(i: int, j: int) -> Scalar:
    """Binomial coefficient with ``binom(-1, -1) == 1``.

    For ``i >= 0`` this is the usual coefficient, and zero whenever ``j < 0``
    or ``j > i``.  ``binom(-1, j)`` is zero for ``j != -1``.

    >>> binom(4, 2), binom(3, 5), binom(-1, -1)
    (mpq(6,1), mpq(0,1), mpq(1,1))
    """
    if i < -1:
        raise ValueError(f"binom undefined for upper index {i} < -1")
    if i == -1:
        return ONE if j == -1 else ZERO
    if j < 0 or j > i:
        return ZERO
    return Q(math.comb(i, j))


def ibinom(i: int, j: int) -> int:
    """Integer-valued :func:`binom`, for the hot loops that stay in ``int``."""
    if i == -1:
        return 1 if j == -1 else 0
    if i < -1:
        raise ValueError(f"binom undefined for upper index {i} < -1")
    if j < 0 or j > i:
        return 0
    return math.comb(i, j)


def format_scalar(c) -> str:
    c = as_scalar(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_scalar(text: str) -> Scalar:
    """Parse ``INT`` or ``INT/INT`` into a reduced fraction."""
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ValueError(f"invalid scalar {text!r}: expected INT or INT/INT")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"invalid scalar {text!r}: zero denominator")
    return Q(num, den)
