"""Reidemeister moves that enlarge a diagram.

Both moves keep the orientation of every component, so oriented
invariants can be compared before and after.
"""

from __future__ import annotations

from .pd import DiagramError, PlanarDiagram

__all__ = ["add_kink", "add_bigon", "arc_faces"]


def _fresh(d: PlanarDiagram) -> int:
    return max((v for x in d.crossings for v in x), default=0) + 1


def _head_slot(d: PlanarDiagram, arc: int) -> tuple[int, int]:
    """The slot where ``arc`` enters a crossing."""
    for ci, (x, fwd) in enumerate(zip(d.crossings, d._over_forward)):
        incoming = (0, 3 if fwd else 1)
        for pos in incoming:
            if x[pos] == arc:
                return ci, pos
    raise DiagramError(f"arc {arc} is not in the diagram")


def _replace(xs: list[list[int]], slot: tuple[int, int], label: int) -> None:
    xs[slot[0]][slot[1]] = label


def add_kink(d: PlanarDiagram, arc: int, sign: int = 1, under_first: bool = True) -> PlanarDiagram:
    """Reidemeister I: put a curl of the given sign into ``arc``.

    ``under_first`` chooses whether the strand passes under or over on its
    first visit to the new crossing.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not d.crossings:
        raise DiagramError("add a kink to a diagram with at least one crossing")
    head = _head_slot(d, arc)
    x, b = _fresh(d), _fresh(d) + 1
    xs = [list(c) for c in d.crossings]
    _replace(xs, head, b)
    if under_first:
        new = (arc, b, x, x) if sign > 0 else (arc, x, x, b)
    else:
        new = (x, x, b, arc) if sign > 0 else (x, arc, b, x)
    return PlanarDiagram(tuple(tuple(c) for c in xs) + (new,), d.loops)


def arc_faces(d: PlanarDiagram, arc: int) -> list[int]:
    """Indices of the faces bordering ``arc``."""
    return [fi for fi, f in enumerate(d.faces) for (ci, k) in f if d.crossings[ci][k] == arc]


def add_bigon(d: PlanarDiagram, over: int, under: int, face: int | None = None) -> PlanarDiagram:
    """Reidemeister II: push arc ``over`` across arc ``under`` through a face they share."""
    if over == under:
        raise DiagramError("a Reidemeister II move needs two different arcs")
    faces = d.faces
    shared = [fi for fi in arc_faces(d, over) if fi in arc_faces(d, under)]
    if face is None:
        if not shared:
            raise DiagramError(f"arcs {over} and {under} do not border a common face")
        face = shared[0]
    elif face not in shared:
        raise DiagramError(f"face {face} does not border both arcs")
    f = faces[face]

    def ends(arc):
        # the face walk leaves along ``arc`` from ``start`` and arrives at ``end``
        for ci, k in f:
            if d.crossings[ci][k] == arc:
                return (ci, k), d._other[(ci, k)]
        raise AssertionError

    s1, e1 = ends(over)
    s2, e2 = ends(under)
    nxt = _fresh(d)
    a1, m1, a2, m2 = nxt, nxt + 1, nxt + 2, nxt + 3
    b1, b2 = over, under
    xs = [list(c) for c in d.crossings]
    _replace(xs, e1, a1)
    _replace(xs, e2, a2)
    # the face lies to the right of the walk; the finger of ``over`` dips across ``under``
    left = (a2, m1, m2, b1)
    right = (m2, m1, b2, a1)
    # orient the new under-strands: the tuples above assume ``under`` runs a2 -> m2 -> b2
    if _head_slot(d, under) == e2:
        left = left[2:] + left[:2]
        right = right[2:] + right[:2]
    return PlanarDiagram(tuple(tuple(c) for c in xs) + (left, right), d.loops)
