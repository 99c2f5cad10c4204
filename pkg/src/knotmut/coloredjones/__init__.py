"""Temperley-Lieb algebra, Jones-Wenzl projectors and colored Jones polynomials."""

from __future__ import annotations

from .colored import colored_bracket, colored_jones
from .projector import JWProjector, jw_projector, loop_value
from .tl import QFrac, RationalTL, TLElement, quantum_int

__all__ = [
    "JWProjector",
    "QFrac",
    "RationalTL",
    "TLElement",
    "colored_bracket",
    "colored_jones",
    "jw_projector",
    "loop_value",
    "quantum_int",
]
