"""Cutting tangles out of diagrams and gluing replacements back in."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..diagram.pd import PlanarDiagram
from .tangle import (
    POSITIONS,
    CableSpec,
    Involution,
    Tangle,
    TangleError,
    count_faces,
    glue_diagram,
    involution,
    is_string_preserving,
    mutate,
)

__all__ = ["TangleContext", "extract_tangle", "embed", "cabled_mutate", "boundary_cycle"]


@dataclass(frozen=True)
class TangleContext:
    """The part of a diagram outside a tangle region.

    ``boundary`` maps each position to the arc labels where the outside
    meets the tangle, in the tangle's counterclockwise order.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    boundary: dict[str, tuple[int, ...]]


def boundary_cycle(d: PlanarDiagram, region: Iterable[int]) -> list[int]:
    """Arcs leaving the crossing set ``region``, in counterclockwise order around it.

    Raises :class:`TangleError` when the region is not a disk.
    """
    region = sorted(set(region))
    xs = d.crossings
    if not region:
        raise TangleError("empty region")
    if any(not 0 <= r < len(xs) for r in region):
        raise TangleError("region refers to a missing crossing")
    inside = set(region)
    slots: dict[int, list[tuple[int, int]]] = {}
    for ci in region:
        for k, v in enumerate(xs[ci]):
            slots.setdefault(v, []).append((ci, k))
    leaves = {v for v, s in slots.items() if len(s) == 1}
    # walk the faces of the region with boundary arcs as dangling edges;
    # each face keeps the region on its left, so leaves come counterclockwise
    seen = set()
    faces = []
    for ci in region:
        for k in range(4):
            if (ci, k) in seen:
                continue
            cur = (ci, k)
            found = []
            while cur not in seen:
                seen.add(cur)
                x, pos = cur
                lab = xs[x][pos]
                if lab in leaves:
                    found.append(lab)
                    nxt = (x, pos)
                else:
                    a, b = slots[lab]
                    nxt = b if a == cur else a
                cur = (nxt[0], (nxt[1] + 1) % 4)
            faces.append(found)
    with_leaves = [f for f in faces if f]
    if len(with_leaves) != 1:
        raise TangleError("region is not simply connected (its boundary arcs lie on several faces)")
    order = with_leaves[0]
    # disk check: collapse the outside to a vertex seen in reverse order
    verts = [list(xs[ci]) for ci in region] + [list(reversed(order))]
    if count_faces(verts) is None:
        raise TangleError("region is not a disk")
    del inside
    return order


def extract_tangle(d: PlanarDiagram, region: Iterable[int], cables: Sequence[int] | None = None,
                   nw: int | None = None) -> tuple[Tangle, TangleContext]:
    """Cut the crossings ``region`` out of ``d``.

    Without ``cables`` the region must meet the rest in exactly four arcs.
    ``cables`` gives the sizes of the four boundary cables counterclockwise
    from ``NW`` (``NW, SW, SE, NE``).  ``nw`` is the boundary arc in the
    first ``NW`` slot and fixes the frame; without it the smallest boundary
    label is tried first and then the other starting arcs, and the first
    grouping whose strands respect the cables is used.
    """
    region = sorted(set(region))
    order = boundary_cycle(d, region)
    k = len(order)
    if cables is None:
        if k != 4:
            raise TangleError(f"region meets the diagram in {k} arcs, not 4")
        cables = (1, 1, 1, 1)
    if sum(cables) != k:
        raise TangleError(f"cable sizes {tuple(cables)} do not add up to the {k} boundary arcs")
    if nw is not None and nw not in order:
        raise TangleError(f"arc {nw} is not on the boundary of the region")
    start = order.index(min(order) if nw is None else nw)
    xs = tuple(d.crossings[ci] for ci in region)
    last_error = None
    for shift in range(1 if nw is not None else k):
        rot = order[(start + shift) % k:] + order[:(start + shift) % k]
        groups = []
        pos = 0
        for size in cables:
            groups.append(tuple(rot[pos:pos + size]))
            pos += size
        ccw = dict(zip(("NW", "SW", "SE", "NE"), groups))
        bd = {p: ccw[p] for p in POSITIONS}
        try:
            strings = _strings_from(xs, bd)
            t = Tangle(xs, bd, strings)
        except TangleError as exc:
            last_error = exc
            continue
        outside = tuple(x for ci, x in enumerate(d.crossings) if ci not in set(region))
        ctx = TangleContext(outside, {p: tuple(reversed(bd[p])) for p in POSITIONS})
        return t, ctx
    raise TangleError(f"no grouping of the boundary arcs into cables {tuple(cables)} is consistent: {last_error}")


def _strings_from(xs, bd) -> tuple:
    probe = Tangle.__new__(Tangle)
    object.__setattr__(probe, "crossings", xs)
    object.__setattr__(probe, "boundary", bd)
    pairs = set()
    for (p, _), (q, _) in probe.strand_ends():
        if p == q:
            raise TangleError("a strand returns to its own cable")
        pairs.add(frozenset((p, q)))
    if len(pairs) != 2:
        raise TangleError("strands do not pair the four cables")
    return tuple(tuple(s) for s in pairs)


def embed(t: Tangle, ctx: TangleContext) -> PlanarDiagram:
    """Glue ``t`` into the hole of ``ctx``; cable sizes must match."""
    for p in POSITIONS:
        if len(t.boundary[p]) != len(ctx.boundary[p]):
            raise TangleError(f"cable size mismatch at {p}")
    used = {v for x in ctx.crossings for v in x} | {v for c in ctx.boundary.values() for v in c}
    off = max(used, default=0)
    inner = [tuple(v + off for v in x) for x in t.crossings]
    glue = []
    for p in POSITIONS:
        # the context lists its arcs counterclockwise around the hole, i.e. reversed
        for v, u in zip(t.boundary[p], reversed(ctx.boundary[p])):
            glue.append((v + off, u))
    return glue_diagram(list(ctx.crossings) + inner, glue)


def cabled_mutate(d: PlanarDiagram, region: Iterable[int], s: Involution | str,
                  spec: CableSpec | tuple[int, int] = (1, 1), nw: int | None = None,
                  cables: Sequence[int] | None = None) -> PlanarDiagram:
    """Replace the cabled tangle ``T(n, m)`` occupying ``region`` by ``T^s(n, m)``.

    Rotating the cabled tangle by ``s`` is the same as cabling the rotated
    tangle, so the region is cut out with cables ``n, m`` and rotated whole.
    ``s`` must preserve both strings.

    The result depends on the frame: ``rho_x`` in one frame is ``rho_y``
    in a frame turned by a quarter.  ``nw`` (the arc in the first ``NW``
    slot) and ``cables`` (sizes ``NW, SW, SE, NE``) pin it down; otherwise
    the first consistent frame is used.
    """
    if not isinstance(spec, CableSpec):
        spec = CableSpec(*spec)
    s = involution(s)
    region = list(region)
    order = boundary_cycle(d, region)
    n, m = spec.n, spec.m
    if cables is not None:
        patterns = [tuple(cables)]
    else:
        patterns = []
        for pat in ((n, n, m, m), (n, m, m, n), (n, m, n, m), (m, m, n, n), (m, n, n, m), (m, n, m, n)):
            if pat not in patterns and sum(pat) == len(order):
                patterns.append(pat)
    if not patterns:
        raise TangleError(f"region meets the diagram in {len(order)} arcs; an ({n}, {m}) cabled tangle "
                          f"needs {2 * (n + m)}")
    last = None
    for pat in patterns:
        try:
            t, ctx = extract_tangle(d, region, pat, nw)
        except TangleError as exc:
            last = exc
            continue
        if not is_string_preserving(t, s):
            raise TangleError(f"{s.name} does not preserve the strings {t.strings}; this is not a mutation")
        return embed(mutate(t, s), ctx)
    raise TangleError(f"region is not an ({n}, {m}) cabled tangle: {last}")
