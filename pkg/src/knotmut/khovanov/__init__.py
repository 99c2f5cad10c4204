"""Integral Khovanov homology."""

from __future__ import annotations

from .complex import Cube, GradedComplex, ResolutionState
from .groups import BigradedGroups, KhDifference, format_kh, kh_diff, parse_kh
from .homology import khovanov

__all__ = [
    "BigradedGroups",
    "Cube",
    "GradedComplex",
    "KhDifference",
    "ResolutionState",
    "format_kh",
    "kh_diff",
    "khovanov",
    "parse_kh",
]
