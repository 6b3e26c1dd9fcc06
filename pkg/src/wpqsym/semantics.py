"""Equality of elements as functions.

Peak-basis keys are canonical class representatives, but the corresponding
functions still satisfy linear relations (for instance
``K[0,2] + K[2,0] == K[0,1,1] + K[1,1,0]``), so comparing K term maps can
report a difference where there is none.  The M basis is a genuine basis, so
comparing M-expansions is faithful.
"""

from __future__ import annotations

from .element import Element, Tensor
from .expansions import to_M


def same_function(x: Element, y: Element) -> bool:
    if x.basis == y.basis and x.basis != "K":
        return x == y
    if x.basis == y.basis and x == y:
        return True
    return to_M(x) == to_M(y)


def is_zero_function(x: Element) -> bool:
    return x.is_zero() or to_M(x).is_zero()


def tensor_to_M(t: Tensor) -> Tensor:
    if t.basis == "M":
        return t
    return t.apply(to_M, to_M) if len(t) else Tensor("M")


def same_tensor(s: Tensor, t: Tensor) -> bool:
    if s.basis == t.basis and s.basis != "K":
        return s == t
    if s.basis == t.basis and s == t:
        return True
    return tensor_to_M(s) == tensor_to_M(t)
