"""Tangles, Conway mutation, cabling and closures."""

from __future__ import annotations

from .closures import NAMED_CLOSURES, noncrossing_matchings, planar_closures
from .random import plat_tangle, random_tangle, random_tangles
from .region import TangleContext, cabled_mutate, embed, extract_tangle
from .tangle import (
    POSITIONS,
    RHO_X,
    RHO_Y,
    RHO_Z,
    CableSpec,
    Involution,
    MultiComponentClosure,
    Tangle,
    TangleError,
    cable,
    close,
    format_tangle,
    involution,
    is_string_preserving,
    mutate,
    parse_tangle,
    string_preserving_involution,
)

__all__ = [
    "CableSpec",
    "Involution",
    "MultiComponentClosure",
    "NAMED_CLOSURES",
    "POSITIONS",
    "RHO_X",
    "RHO_Y",
    "RHO_Z",
    "Tangle",
    "TangleContext",
    "TangleError",
    "cable",
    "cabled_mutate",
    "close",
    "embed",
    "extract_tangle",
    "format_tangle",
    "involution",
    "is_string_preserving",
    "mutate",
    "noncrossing_matchings",
    "parse_tangle",
    "plat_tangle",
    "planar_closures",
    "random_tangle",
    "random_tangles",
    "string_preserving_involution",
]
