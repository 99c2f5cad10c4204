"""Oriented planar diagrams in PD notation.

A crossing ``X(a, b, c, d)`` lists the four arc labels counterclockwise,
starting from the incoming under-strand, so the under-strand runs ``a -> c``.
The over-strand runs either ``d -> b`` (a positive crossing) or ``b -> d``
(a negative crossing)::

              c
              ^
              |
        d ----|---> b        positive: over-strand d -> b
              |
              a

Internally a crossing is stored in this oriented form.  Operations that
destroy orientation (mirror, tangle rotation, unoriented smoothing) build
*unoriented* tuples, where only "under-strand sits at positions 0 and 2"
is guaranteed, and hand them to :func:`orient`.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Crossing",
    "PlanarDiagram",
    "DiagramError",
    "PDSyntaxError",
    "parse_pd",
    "format_pd",
    "orient",
    "writhe",
    "mirror",
    "braid_closure",
]

Crossing = tuple[int, int, int, int]


class DiagramError(ValueError):
    """Raised for inconsistent or non-planar diagram data."""


class PDSyntaxError(DiagramError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _slot_table(crossings: Sequence[Crossing]) -> dict[int, list[tuple[int, int]]]:
    slots: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for ci, x in enumerate(crossings):
        for pos, label in enumerate(x):
            slots[label].append((ci, pos))
    return slots


def _check_labels(crossings: Sequence[Crossing]) -> dict[int, list[tuple[int, int]]]:
    slots = _slot_table(crossings)
    bad = sorted(lab for lab, s in slots.items() if len(s) != 2)
    if bad:
        counts = ", ".join(f"{lab}:{len(slots[lab])}" for lab in bad)
        raise DiagramError(f"every arc label must appear exactly twice; offending labels {counts}")
    return slots


def _traverse(xs: Sequence[Crossing]):
    """Walk every component once.

    Returns ``(flip, over_forward, components)``: whether each tuple must be
    rotated by two places to start at its incoming under-strand, whether
    each over-strand runs d -> b, and the arc labels of each component in
    traversal order.
    """
    slots = _check_labels(xs)
    other = {}
    for (s1, s2) in slots.values():
        other[s1] = s2
        other[s2] = s1
    n = len(xs)
    flip = [False] * n
    fwd = [False] * n
    under_seen = [False] * n
    visited: set[tuple[int, int]] = set()
    comps = []

    def walk(start):
        # ``start`` is a slot we leave through
        comp = []
        slot = start
        while True:
            visited.add(slot)
            comp.append(xs[slot[0]][slot[1]])
            ci, pos = other[slot]
            visited.add((ci, pos))
            if pos % 2 == 0:
                if not under_seen[ci]:
                    under_seen[ci] = True
                    flip[ci] = pos == 2
            else:
                fwd[ci] = pos == 3
            slot = (ci, (pos + 2) % 4)
            if slot == start:
                comps.append(tuple(comp))
                return

    for ci in range(n):
        if (ci, 2) not in visited:
            walk((ci, 2))
    # components that never pass under: leave through position 1
    for ci in range(n):
        if (ci, 1) not in visited:
            walk((ci, 1))
    return flip, fwd, comps


def orient(crossings: Iterable[Sequence[int]]) -> tuple[Crossing, ...]:
    """Orient unoriented crossings (under-strand at positions 0 and 2).

    Each component is traversed once; a crossing's tuple is rotated by two
    places when the traversal enters its under-strand at position 2.
    Components that never pass under are oriented so they leave the first
    such crossing through position 1.
    """
    xs = [tuple(x) for x in crossings]
    flip, _, _ = _traverse(xs)
    return tuple((x[2], x[3], x[0], x[1]) if f else x for x, f in zip(xs, flip))


@dataclass(frozen=True)
class PlanarDiagram:
    """An oriented knot or link diagram.

    ``crossings`` are oriented PD quadruples; ``loops`` counts additional
    crossingless split unknotted components.  The unknot is
    ``PlanarDiagram((), loops=1)``.
    """

    crossings: tuple[Crossing, ...]
    loops: int = 0
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        if self.check:
            self.validate()

    # -- construction -----------------------------------------------------
    @classmethod
    def unknot(cls) -> PlanarDiagram:
        return cls((), loops=1)

    @classmethod
    def from_unoriented(cls, crossings: Iterable[Sequence[int]], loops: int = 0) -> PlanarDiagram:
        return cls(orient(crossings), loops=loops)

    def validate(self) -> None:
        xs = self.crossings
        for x in xs:
            if len(x) != 4:
                raise DiagramError(f"crossing {x} does not have four labels")
            if any(v <= 0 for v in x):
                raise DiagramError(f"crossing {x} has a non-positive label")
        _check_labels(xs)
        if orient(xs) != xs:
            raise DiagramError("under-strand orientations are inconsistent along a component")
        if not self.is_planar():
            raise DiagramError("rotation system is not planar (Euler characteristic check failed)")

    # -- structure --------------------------------------------------------
    @cached_property
    def slots(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        return {k: tuple(v) for k, v in _slot_table(self.crossings).items()}

    @cached_property
    def _other(self) -> dict[tuple[int, int], tuple[int, int]]:
        other = {}
        for s1, s2 in self.slots.values():
            other[s1] = s2
            other[s2] = s1
        return other

    @cached_property
    def _walk(self):
        return _traverse(self.crossings)

    @property
    def _over_forward(self) -> list[bool]:
        """For each crossing, True when the over-strand runs d -> b."""
        return self._walk[1]

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if f else -1 for f in self._over_forward)

    @property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Arc labels of each component in traversal order (crossingless loops excluded)."""
        return tuple(self._walk[2])

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components) + self.loops

    @cached_property
    def label_component(self) -> dict[int, int]:
        return {lab: i for i, comp in enumerate(self.components) for lab in comp}

    @cached_property
    def faces(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Faces as cycles of departing slots ``(crossing, position)``.

        From slot ``(x, k)`` follow arc ``X[k]`` to its other end ``(y, m)`` and
        depart again from ``(y, m+1)``.  Each slot departs exactly one face.
        """
        return _faces(self.crossings, self._other)

    def is_planar(self) -> bool:
        if not self.crossings:
            return True
        faces = self.faces
        # connected components of the 4-valent graph
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for (c1, _), (c2, _) in self.slots.values():
            parent[find(c1)] = find(c2)
        verts = defaultdict(int)
        for ci in range(len(self.crossings)):
            verts[find(ci)] += 1
        nfaces = defaultdict(int)
        for f in faces:
            nfaces[find(f[0][0])] += 1
        return all(nfaces[r] == v + 2 for r, v in verts.items())

    def is_knot(self) -> bool:
        return self.n_components == 1

    def relabel(self, mapping: dict[int, int]) -> PlanarDiagram:
        return PlanarDiagram(tuple(tuple(mapping[v] for v in x) for x in self.crossings), self.loops)

    def standard_labels(self) -> PlanarDiagram:
        """Relabel arcs 1..2n consecutively along each component."""
        mapping = {}
        k = 1
        for comp in self.components:
            for lab in comp:
                mapping[lab] = k
                k += 1
        return self.relabel(mapping)

    def __str__(self):
        return format_pd(self)


def _faces(crossings, other) -> tuple[tuple[tuple[int, int], ...], ...]:
    seen = set()
    faces = []
    for ci in range(len(crossings)):
        for k in range(4):
            if (ci, k) in seen:
                continue
            face = []
            slot = (ci, k)
            while slot not in seen:
                seen.add(slot)
                face.append(slot)
                cj, m = other[slot]
                slot = (cj, (m + 1) % 4)
            faces.append(tuple(face))
    return tuple(faces)


# -- text format -------------------------------------------------------------
_TERM = re.compile(r"X\s*[\(\[]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\)\]]")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse whitespace-separated ``X(a,b,c,d)`` terms; ``#`` starts a comment.

    An empty document is the crossingless unknot.  An optional leading
    ``PD[ ... ]`` wrapper and commas between terms are tolerated.
    """
    crossings = []
    pos = 0
    lines = text.splitlines(keepends=True)
    cleaned = "".join(line.split("#", 1)[0] + ("\n" if line.endswith("\n") else "") for line in lines)
    s = cleaned
    if s.strip().startswith("PD"):
        m = re.match(r"\s*PD\s*[\(\[](.*)[\)\]]\s*$", s, re.S)
        if not m:
            raise PDSyntaxError("unterminated PD[...] wrapper", 0)
        offset = m.start(1)
        s = " " * offset + m.group(1)
    n = len(s)
    while pos < n:
        ch = s[pos]
        if ch.isspace() or ch == ",":
            pos += 1
            continue
        m = _TERM.match(s, pos)
        if not m:
            raise PDSyntaxError(f"expected X(a,b,c,d), found {s[pos:pos + 12]!r}", pos)
        crossings.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    if not crossings:
        return PlanarDiagram.unknot()
    xs = tuple(crossings)
    if any(v <= 0 for x in xs for v in x):
        raise DiagramError("arc labels must be positive integers")
    _check_labels(xs)
    oriented = orient(xs)
    if oriented != xs:
        raise DiagramError("under-strand orientations are inconsistent along a component")
    return PlanarDiagram(xs)


def format_pd(d: PlanarDiagram) -> str:
    body = " ".join("X(%d,%d,%d,%d)" % x for x in d.crossings)
    if d.loops and d.crossings:
        body += f"  # plus {d.loops} crossingless loop(s)"
    return body


# -- basic operations --------------------------------------------------------
def writhe(d: PlanarDiagram) -> int:
    return sum(d.signs)


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Swap over and under at every crossing."""
    out = []
    for x, fwd in zip(d.crossings, d._over_forward):
        a, b, c, e = x
        # new under-strand is the old over-strand, starting at its incoming end
        out.append((e, a, b, c) if fwd else (b, c, e, a))
    return PlanarDiagram(tuple(out), d.loops)


def braid_closure(word: Sequence[int], strands: int | None = None) -> PlanarDiagram:
    """Closure of a braid word; ``i`` is the positive generator sigma_i, ``-i`` its inverse.

    Positive generators give positive crossings.
    """
    k = strands or (max((abs(g) for g in word), default=0) + 1)
    current = list(range(1, k + 1))
    first = list(current)
    nxt = k + 1
    xs = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < k - 1:
            raise ValueError(f"generator {g} out of range for {k} strands")
        bl, br = current[i], current[i + 1]
        al, ar = nxt, nxt + 1
        nxt += 2
        if g > 0:
            xs.append((br, ar, al, bl))
        else:
            xs.append((bl, br, ar, al))
        # strands swap positions
        current[i], current[i + 1] = al, ar
    # identify the top labels with the bottom ones
    mapping = {}
    for top, bottom in zip(current, first):
        mapping[top] = bottom

    def resolve(v):
        seen = set()
        while v in mapping and v not in seen:
            seen.add(v)
            if mapping[v] == v:
                break
            v = mapping[v]
        return v

    xs = [tuple(resolve(v) for v in x) for x in xs]
    used = {v for x in xs for v in x}
    loops = 0
    for top, bottom in zip(current, first):
        if top == bottom and bottom not in used:
            loops += 1
    if not xs:
        return PlanarDiagram((), loops=loops)
    # compact labels
    order = sorted(used)
    ren = {v: i + 1 for i, v in enumerate(order)}
    d = PlanarDiagram(tuple(tuple(ren[v] for v in x) for x in xs), loops)
    return d
