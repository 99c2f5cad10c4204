"""Closures of (cabled) tangles.

A planar closure joins the boundary slots of a tangle by arcs outside the
disk that do not cross, so it is a non-crossing perfect matching of the
slots in counterclockwise order.
"""

from __future__ import annotations

from functools import lru_cache

from .tangle import Tangle, TangleError

__all__ = ["noncrossing_matchings", "planar_closures", "named_closure", "NAMED_CLOSURES"]


@lru_cache(maxsize=None)
def noncrossing_matchings(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All non-crossing perfect matchings of points ``0..n-1`` on a circle."""
    if n % 2:
        return ()

    def rec(lo, hi):
        if lo > hi:
            return [()]
        out = []
        for k in range(lo + 1, hi + 1, 2):
            for inner in rec(lo + 1, k - 1):
                for outer in rec(k + 1, hi):
                    out.append(((lo, k),) + inner + outer)
        return out

    return tuple(rec(0, n - 1))


def planar_closures(t: Tangle) -> list[list[tuple[tuple[str, int], tuple[str, int]]]]:
    """Every planar closure of ``t`` as explicit slot pairs (Catalan many)."""
    slots = t.boundary_order()
    return [[(slots[i], slots[j]) for i, j in m] for m in noncrossing_matchings(len(slots))]


# Named closures of the cabled tangle T(1, 2).  Each entry lists the
# non-crossing matching of the six boundary slots (counterclockwise from
# NE) by index into ``noncrossing_matchings(6)``.
NAMED_CLOSURES: dict[str, int] = {}


def named_closure(name: str, t: Tangle):
    key = name.strip().lower()
    if key not in NAMED_CLOSURES:
        raise TangleError(f"unknown closure {name!r}")
    slots = t.boundary_order()
    if len(slots) != 6:
        raise TangleError(f"closure {name!r} needs a tangle with six boundary slots, got {len(slots)}")
    return [(slots[i], slots[j]) for i, j in noncrossing_matchings(6)[NAMED_CLOSURES[key]]]
