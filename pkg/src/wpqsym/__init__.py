"""Exact arithmetic for weak composition quasisymmetric functions and their
weak peak analogue, with brute-force oracles and property suites."""

from .compositions import canonical_form, parse_composition, format_composition
from .element import Element, Tensor, parse_element, format_element
from .expansions import convert, to_F, to_M
from .hopf import antipode, coproduct, counit
from .products import product
from .rota_baxter import rb_P, rb_P_hat

__all__ = [
    "Element",
    "Tensor",
    "antipode",
    "canonical_form",
    "convert",
    "coproduct",
    "counit",
    "format_composition",
    "format_element",
    "parse_composition",
    "parse_element",
    "product",
    "rb_P",
    "rb_P_hat",
    "to_F",
    "to_M",
]

__version__ = "0.1.0"
