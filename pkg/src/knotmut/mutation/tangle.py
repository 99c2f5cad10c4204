"""2-2 tangles, their mutations, cables and closures.

A tangle lives in a disk whose four boundary positions are, in
counterclockwise order, ``NE, NW, SW, SE``.  Crossings are PD quadruples
read counterclockwise with the under-strand at positions 0 and 2; the
direction of travel is not stored (it depends on how the tangle is
closed).  Each boundary position carries a *cable*: a tuple of arc labels
listed counterclockwise along the boundary circle.  A plain tangle has
cables of length one; cabling multiplies them.

A label occurs twice overall, counting crossing slots and cable slots.
A label occurring in two cable slots is a crossingless strand.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..diagram.pd import DiagramError, PlanarDiagram

__all__ = [
    "POSITIONS",
    "Tangle",
    "TangleError",
    "Involution",
    "RHO_X",
    "RHO_Y",
    "RHO_Z",
    "involution",
    "CableSpec",
    "MultiComponentClosure",
    "is_string_preserving",
    "string_preserving_involution",
    "mutate",
    "cable",
    "close",
    "closure_joins",
    "parse_tangle",
    "format_tangle",
    "count_faces",
    "glue_diagram",
]

# counterclockwise order around the tangle disk
POSITIONS = ("NE", "NW", "SW", "SE")
_CANON = ("NW", "NE", "SW", "SE")


class TangleError(DiagramError):
    """Inconsistent tangle data or an impossible tangle operation."""


class MultiComponentClosure(UserWarning):
    """A closure produced a link with more than one component."""


# -- involutions ---------------------------------------------------------------
@dataclass(frozen=True)
class Involution:
    """A pi-rotation of the tangle ball, recorded by its endpoint permutation.

    ``reflects`` is True for the two rotations about in-plane axes; they
    reverse the planar orientation and exchange over and under.
    """

    name: str
    perm: Mapping[str, str] = field(compare=False)
    reflects: bool = field(compare=False)

    def __call__(self, position: str) -> str:
        return self.perm[position]

    def __repr__(self):
        return f"Involution({self.name})"


RHO_X = Involution("rho_x", {"NW": "NE", "NE": "NW", "SW": "SE", "SE": "SW"}, True)
RHO_Y = Involution("rho_y", {"NW": "SW", "SW": "NW", "NE": "SE", "SE": "NE"}, True)
RHO_Z = Involution("rho_z", {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}, False)
_INVOLUTIONS = {"x": RHO_X, "y": RHO_Y, "z": RHO_Z}


def involution(name: str | Involution) -> Involution:
    """Look up ``"x"``, ``"rho_y"``, ``"ρz"`` and similar spellings."""
    if isinstance(name, Involution):
        return name
    key = name.strip().lower()[-1:]
    if key not in _INVOLUTIONS:
        raise ValueError(f"unknown involution {name!r}; expected one of x, y, z")
    return _INVOLUTIONS[key]


@dataclass(frozen=True)
class CableSpec:
    """Copies of the first and second string.

    ``framing="compensated"`` inserts full twists so that the copies of a
    string have linking number equal to the string's requested framing
    (default 0) rather than its blackboard self-writhe;
    ``framing="blackboard"`` inserts nothing.
    """

    n: int
    m: int
    framing: str = "compensated"

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("cable multiplicities must be at least 1")
        if self.framing not in ("compensated", "blackboard"):
            raise ValueError(f"unknown framing convention {self.framing!r}")


# -- the tangle type -----------------------------------------------------------
def _canon_strings(strings) -> tuple[tuple[str, str], tuple[str, str]]:
    pairs = [tuple(sorted(s, key=_CANON.index)) for s in strings]
    pairs.sort(key=lambda s: _CANON.index(s[0]))
    if len(pairs) != 2 or sorted(p for s in pairs for p in s) != sorted(_CANON):
        raise TangleError(f"string partition {strings} does not pair the four positions")
    return tuple(pairs)  # type: ignore[return-value]


@dataclass(frozen=True)
class Tangle:
    """A 2-2 tangle (possibly cabled).

    ``strings`` pairs the four positions; the first string is the one
    ending at ``NW``.  ``framing`` holds the requested framing of each
    string relative to zero (used by :func:`cable`).
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    boundary: Mapping[str, tuple[int, ...]]
    strings: tuple[tuple[str, str], tuple[str, str]] = (("NW", "NE"), ("SW", "SE"))
    framing: tuple[int, int] = (0, 0)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        bd = {}
        for p in POSITIONS:
            v = self.boundary[p]
            bd[p] = (int(v),) if isinstance(v, int) else tuple(int(u) for u in v)
        object.__setattr__(self, "boundary", bd)
        old = tuple(tuple(s) for s in self.strings)
        new = _canon_strings(old)
        fr = tuple(self.framing)
        if set(old[0]) != set(new[0]):
            fr = (fr[1], fr[0])
        object.__setattr__(self, "strings", new)
        object.__setattr__(self, "framing", fr)
        self._validate()

    # -- structure ----------------------------------------------------------
    def _validate(self):
        counts: dict[int, int] = {}
        for x in self.crossings:
            if len(x) != 4:
                raise TangleError(f"crossing {x} does not have four labels")
            for v in x:
                counts[v] = counts.get(v, 0) + 1
        for cab in self.boundary.values():
            if not cab:
                raise TangleError("empty boundary cable")
            for v in cab:
                counts[v] = counts.get(v, 0) + 1
        bad = sorted(v for v, c in counts.items() if c != 2)
        if bad:
            raise TangleError(f"labels {bad} do not occur exactly twice")
        ends = self.strand_ends()
        partner = {p: q for s in self.strings for p, q in (s, s[::-1])}
        for (p, _), (q, _) in ends:
            if partner[p] != q:
                raise TangleError(f"a strand joins {p} to {q}, contradicting the string partition {self.strings}")
        for s in self.strings:
            if len(self.boundary[s[0]]) != len(self.boundary[s[1]]):
                raise TangleError(f"string {s} has cables of different sizes")
        if self.closed_loops():
            raise TangleError("tangle contains closed components")
        if not self.is_planar():
            raise TangleError("tangle rotation system is not planar")

    @property
    def is_plain(self) -> bool:
        return all(len(c) == 1 for c in self.boundary.values())

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def label(self, position: str) -> int:
        cab = self.boundary[position]
        if len(cab) != 1:
            raise TangleError("label() is only defined for plain tangles")
        return cab[0]

    def _slots(self):
        where: dict[int, list] = {}
        for ci, x in enumerate(self.crossings):
            for k, v in enumerate(x):
                where.setdefault(v, []).append(("x", ci, k))
        for p in POSITIONS:
            for i, v in enumerate(self.boundary[p]):
                where.setdefault(v, []).append(("b", p, i))
        return where

    def _trace(self, start: tuple[str, int], where=None):
        """Follow a strand from boundary slot ``start``.

        Returns ``(end slot, visits)`` where ``visits`` lists
        ``(crossing, entry position)``.
        """
        where = where or self._slots()
        p, i = start
        lab = self.boundary[p][i]
        prev = ("b", p, i)
        visits = []
        while True:
            a, b = where[lab]
            nxt = b if a == prev else a
            if nxt[0] == "b":
                return (nxt[1], nxt[2]), visits
            _, ci, k = nxt
            visits.append((ci, k))
            out = (k + 2) % 4
            lab = self.crossings[ci][out]
            prev = ("x", ci, out)

    def strand_ends(self) -> list[tuple[tuple[str, int], tuple[str, int]]]:
        """Pairs of boundary slots joined by a strand, each strand once."""
        where = self._slots()
        seen = set()
        out = []
        for p in _CANON:
            for i in range(len(self.boundary[p])):
                if (p, i) in seen:
                    continue
                end, _ = self._trace((p, i), where)
                seen.add((p, i))
                seen.add(end)
                out.append(((p, i), end))
        return out

    def closed_loops(self) -> int:
        """Number of crossing slots not reached from the boundary (nonzero means closed components)."""
        where = self._slots()
        hit = set()
        for p in POSITIONS:
            for i in range(len(self.boundary[p])):
                _, visits = self._trace((p, i), where)
                for ci, k in visits:
                    hit.add((ci, k))
                    hit.add((ci, (k + 2) % 4))
        return 4 * len(self.crossings) - len(hit)

    def boundary_order(self) -> list[tuple[str, int]]:
        """All boundary slots in counterclockwise order, starting at ``NE``."""
        return [(p, i) for p in POSITIONS for i in range(len(self.boundary[p]))]

    def is_planar(self) -> bool:
        """Euler check with the disk exterior collapsed to one extra vertex."""
        verts = [list(x) for x in self.crossings]
        # seen from outside the disk, the boundary runs clockwise
        verts.append([self.boundary[p][i] for p, i in reversed(self.boundary_order())])
        return count_faces(verts) is not None

    def oriented_strands(self):
        """Orient every strand from its first end in canonical order.

        Returns ``(oriented crossings, strand of each crossing slot,
        boundary slots that start a strand)``.  Oriented crossings follow
        the PD convention: ``a`` is the incoming under-arc, and the second
        entry of the pair is True when the over-strand runs ``d -> b``.
        """
        where = self._slots()
        forward_under: dict[int, bool] = {}
        over_dir: dict[int, bool] = {}
        strand_of: dict[tuple[int, int], int] = {}
        starts = []
        seen = set()
        sid = 0
        for p in _CANON:
            for i in range(len(self.boundary[p])):
                if (p, i) in seen:
                    continue
                end, visits = self._trace((p, i), where)
                seen.add((p, i))
                seen.add(end)
                starts.append((p, i))
                for ci, k in visits:
                    strand_of[(ci, k)] = sid
                    strand_of[(ci, (k + 2) % 4)] = sid
                    if k in (0, 2):
                        forward_under[ci] = k == 0
                    else:
                        over_dir[ci] = k == 3
                sid += 1
        out = []
        for ci, x in enumerate(self.crossings):
            a, b, c, d = x
            if forward_under[ci]:
                out.append(((a, b, c, d), over_dir[ci]))
            else:
                # reading from c keeps counterclockwise order; the over-strand flips role
                out.append(((c, d, a, b), not over_dir[ci]))
        return out, strand_of, starts

    def string_of_strand(self) -> dict[int, int]:
        """Map each strand index (as in :meth:`oriented_strands`) to its string 0 or 1."""
        _, _, starts = self.oriented_strands()
        return {s: (0 if p in self.strings[0] else 1) for s, (p, _) in enumerate(starts)}

    def self_writhe(self) -> list[int]:
        """Signed self-crossings of each strand."""
        xs, strand_of, starts = self.oriented_strands()
        w = [0] * len(starts)
        for ci, (_, positive) in enumerate(xs):
            s_under = strand_of[(ci, 0)]
            if s_under == strand_of[(ci, 1)]:
                w[s_under] += 1 if positive else -1
        return w

    def __str__(self):
        return format_tangle(self)


def count_faces(verts: Sequence[Sequence[int]]) -> int | None:
    """Face count of a connected rotation system, or None when it is not planar.

    ``verts`` lists the edge labels around each vertex counterclockwise;
    each label joins two slots.  Disconnected systems are checked per
    component.
    """
    ends: dict[int, list[tuple[int, int]]] = {}
    for vi, labs in enumerate(verts):
        for k, v in enumerate(labs):
            ends.setdefault(v, []).append((vi, k))
    other = {}
    for v, (s1, s2) in ((v, e) for v, e in ends.items() if len(e) == 2):
        other[s1] = s2
        other[s2] = s1
    if len(other) != sum(len(x) for x in verts):
        return None
    seen = set()
    faces = []
    for vi, labs in enumerate(verts):
        for k in range(len(labs)):
            if (vi, k) in seen:
                continue
            cur = (vi, k)
            face_v = vi
            while cur not in seen:
                seen.add(cur)
                w, m = other[cur]
                cur = (w, (m + 1) % len(verts[w]))
            faces.append(face_v)
    parent = list(range(len(verts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for (v1, _), (v2, _) in other.items():
        parent[find(v1)] = find(v2)
    nv: dict[int, int] = {}
    ne: dict[int, int] = {}
    nf: dict[int, int] = {}
    for vi, labs in enumerate(verts):
        r = find(vi)
        nv[r] = nv.get(r, 0) + 1
        ne[r] = ne.get(r, 0) + len(labs)
    for f in faces:
        r = find(f)
        nf[r] = nf.get(r, 0) + 1
    for r in nv:
        if nv[r] - ne[r] // 2 + nf.get(r, 0) != 2:
            return None
    return len(faces)


# -- mutation ------------------------------------------------------------------
def is_string_preserving(t: Tangle, s: Involution | str) -> bool:
    s = involution(s)
    return all({s(p), s(q)} == {p, q} for p, q in t.strings)


def string_preserving_involution(t: Tangle) -> Involution:
    """The unique involution preserving both strings of ``t``."""
    for s in (RHO_X, RHO_Y, RHO_Z):
        if is_string_preserving(t, s):
            return s
    raise AssertionError("every string partition has a preserving involution")


def mutate(t: Tangle, s: Involution | str) -> Tangle:
    """Rotate ``t`` by the involution ``s``.

    Position ``P`` of the result shows what ``s(P)`` showed before.  The
    two in-plane rotations reverse counterclockwise order (so crossings
    are read backwards and cables reversed) and exchange over with under.
    """
    s = involution(s)
    if s.reflects:
        xs = tuple((d, c, b, a) for a, b, c, d in t.crossings)
        bd = {p: tuple(reversed(t.boundary[s(p)])) for p in POSITIONS}
    else:
        xs = t.crossings
        bd = {p: t.boundary[s(p)] for p in POSITIONS}
    strings = tuple((s(p), s(q)) for p, q in t.strings)
    return Tangle(xs, bd, strings, t.framing)


# -- cabling -------------------------------------------------------------------
class _Labels:
    def __init__(self, start: int):
        self.next = start

    def __call__(self) -> int:
        self.next += 1
        return self.next - 1


def _full_twists(k: int, twists: int, bottom: list[int], top: list[int], fresh) -> list[tuple]:
    """Braid of ``twists`` full twists on ``k`` upward strands from ``bottom`` to ``top`` labels."""
    sign = 1 if twists > 0 else -1
    word = [sign * (j + 1) for _ in range(abs(twists) * k) for j in range(k - 1)]
    if not word:
        return []
    cur = list(bottom)
    xs = []
    for g in word:
        i = abs(g) - 1
        bl, br = cur[i], cur[i + 1]
        al, ar = fresh(), fresh()
        xs.append((br, ar, al, bl) if g > 0 else (bl, br, ar, al))
        cur[i], cur[i + 1] = al, ar
    ren = dict(zip(cur, top))
    return [tuple(ren.get(v, v) for v in x) for x in xs]


def cable_crossings(xs, copies, fresh, head_label=None):
    """Blow each oriented crossing up into a grid of crossings.

    ``xs`` holds oriented crossings ``((a, b, c, d), positive)``;
    ``copies(label)`` returns the labels of the parallel copies of an arc,
    ordered left to right relative to the direction of travel.
    ``head_label(label, i)`` may rename the copy where the arc *ends*
    (used to cut an arc open).  Returns unoriented quadruples.
    """
    if head_label is None:
        def head_label(lab, i):
            return copies(lab)[i]
    out = []
    for (a, b, c, d), positive in xs:
        ku = len(copies(a))
        ko = len(copies(b))
        v_in = [head_label(a, i) for i in range(ku)]
        v_out = copies(c)
        if positive:
            o_in, o_out = d, b  # over-strand runs west to east, its left side is north
            idx = [ko - 1 - r for r in range(ko)]
            west = [head_label(o_in, idx[r]) for r in range(ko)]
            east = [copies(o_out)[idx[r]] for r in range(ko)]
        else:
            o_in, o_out = b, d
            idx = list(range(ko))
            east = [head_label(o_in, idx[r]) for r in range(ko)]
            west = [copies(o_out)[idx[r]] for r in range(ko)]
        vert = [[v_in[i]] + [fresh() for _ in range(ko - 1)] + [v_out[i]] for i in range(ku)]
        horiz = [[west[r]] + [fresh() for _ in range(ku - 1)] + [east[r]] for r in range(ko)]
        for r in range(ko):
            for i in range(ku):
                out.append((vert[i][r], horiz[r][i + 1], vert[i][r + 1], horiz[r][i]))
    return out


def cable(t: Tangle, spec: CableSpec | tuple[int, int]) -> Tangle:
    """Replace the strands of string 1 by ``n`` parallel copies and those of string 2 by ``m``.

    Each crossing of a strand with ``k`` copies over one with ``l`` copies
    becomes a ``k x l`` grid.  Under the compensated framing convention
    every strand of a string also receives ``framing - self_writhe`` full
    twists next to its starting end.
    """
    if not isinstance(spec, CableSpec):
        spec = CableSpec(*spec)
    xs, strand_of, starts = t.oriented_strands()
    string_of = {s: (0 if p in t.strings[0] else 1) for s, (p, _) in enumerate(starts)}
    mult = {s: (spec.n if string_of[s] == 0 else spec.m) for s in string_of}
    labels = {v for x in t.crossings for v in x} | {v for c in t.boundary.values() for v in c}
    fresh = _Labels(max(labels, default=0) + 1)
    # strand of every label
    lab_strand: dict[int, int] = {}
    for s, (p, i) in enumerate(starts):
        lab_strand[t.boundary[p][i]] = s
    for (ci, k), s in strand_of.items():
        lab_strand[t.crossings[ci][k]] = s
    copy_table = {lab: [fresh() for _ in range(mult[s])] for lab, s in lab_strand.items()}
    twists = {}
    if spec.framing == "compensated":
        w = t.self_writhe()
        twists = {s: t.framing[string_of[s]] - w[s] for s in string_of if mult[s] > 1}
        twists = {s: k for s, k in twists.items() if k}
    # a twisted strand gets fresh labels on its boundary side
    start_copies = {}
    for s, (p, i) in enumerate(starts):
        if s in twists:
            start_copies[s] = [fresh() for _ in range(mult[s])]
    new_xs = cable_crossings(xs, lambda lab: copy_table[lab], fresh)
    for s, k in twists.items():
        p, i = starts[s]
        lab = t.boundary[p][i]
        new_xs.extend(_full_twists(mult[s], k, start_copies[s], copy_table[lab], fresh))
    start_set = {st: s for s, st in enumerate(starts)}
    bd = {}
    for p in POSITIONS:
        cab = []
        for i, lab in enumerate(t.boundary[p]):
            s = start_set.get((p, i))
            if s is not None:
                cps = start_copies.get(s, copy_table[lab])
                cab.extend(cps)  # entering strand: left to right is counterclockwise
            else:
                cab.extend(reversed(copy_table[lab]))
        bd[p] = tuple(cab)
    return _compact(Tangle(tuple(new_xs), bd, t.strings, t.framing))


def _compact(t: Tangle) -> Tangle:
    """Relabel arcs 1, 2, ... in order of first appearance."""
    ren: dict[int, int] = {}

    def r(v):
        if v not in ren:
            ren[v] = len(ren) + 1
        return ren[v]

    bd = {p: tuple(r(v) for v in t.boundary[p]) for p in POSITIONS}
    xs = tuple(tuple(r(v) for v in x) for x in t.crossings)
    return Tangle(xs, bd, t.strings, t.framing)


# -- closures ------------------------------------------------------------------
_NAMED = ("numerator", "denominator")


def closure_joins(t: Tangle, closure) -> list[tuple[tuple[str, int], tuple[str, int]]]:
    """Resolve a closure spec into pairs of boundary slots.

    ``closure`` is ``"numerator"`` (``NW`` to ``NE``, ``SW`` to ``SE``),
    ``"denominator"`` (``NW`` to ``SW``, ``NE`` to ``SE``), one of the
    named closures in :mod:`knotmut.mutation.closures`, or an explicit
    list of slot pairs ``((P, i), (Q, j))``.  Cables are joined nested, so
    the arcs outside the disk never cross.
    """
    if isinstance(closure, str):
        name = closure.strip().lower()
        if name == "numerator":
            return _nested(t, [("NE", "NW"), ("SW", "SE")])
        if name == "denominator":
            return _nested(t, [("NW", "SW"), ("SE", "NE")])
        from .closures import named_closure

        return named_closure(name, t)
    joins = []
    for a, b in closure:
        joins.append(((a[0], int(a[1])), (b[0], int(b[1]))))
    return joins


def _nested(t: Tangle, pairs) -> list:
    joins = []
    for p, q in pairs:
        cp, cq = t.boundary[p], t.boundary[q]
        if len(cp) != len(cq):
            raise TangleError(f"cables at {p} and {q} have different sizes")
        k = len(cp)
        # q follows p counterclockwise: the last slot of p faces the first of q
        for i in range(k):
            joins.append(((p, k - 1 - i), (q, i)))
    return joins


def _check_noncrossing(t: Tangle, joins) -> None:
    order = {slot: k for k, slot in enumerate(t.boundary_order())}
    used = set()
    chords = []
    for a, b in joins:
        if a not in order or b not in order:
            raise TangleError(f"closure refers to a missing boundary slot {a if a not in order else b}")
        if a in used or b in used or a == b:
            raise TangleError("closure uses a boundary slot twice")
        used.update((a, b))
        i, j = sorted((order[a], order[b]))
        chords.append((i, j))
    if len(used) != len(order):
        raise TangleError("closure leaves boundary slots unjoined")
    for i1, j1 in chords:
        for i2, j2 in chords:
            if i1 < i2 < j1 < j2:
                raise TangleError("closure arcs cross outside the tangle")


def close(t: Tangle, closure="numerator") -> PlanarDiagram:
    """Join the boundary slots of ``t`` outside the disk.

    ``closure`` may also be a second tangle: it is placed below ``t``
    with its ``NW, NE`` cables joined to the ``SW, SE`` cables of ``t``,
    and the ``NW, NE`` cables of ``t`` run around the outside to its
    ``SW, SE``.  A closure with several components is still returned, with
    a :class:`MultiComponentClosure` warning.
    """
    if isinstance(closure, Tangle):
        d = _close_with(t, closure)
    else:
        joins = closure_joins(t, closure)
        _check_noncrossing(t, joins)
        glue = [(t.boundary[p][i], t.boundary[q][j]) for (p, i), (q, j) in joins]
        d = glue_diagram(t.crossings, glue)
    if d.n_components > 1:
        warnings.warn(f"closure has {d.n_components} components", MultiComponentClosure, stacklevel=2)
    return d


def _close_with(t: Tangle, outside: Tangle) -> PlanarDiagram:
    off = max([v for x in t.crossings for v in x] + [v for c in t.boundary.values() for v in c]) + 1
    xs = [tuple(v + off for v in x) for x in outside.crossings]
    bd = {p: tuple(v + off for v in c) for p, c in outside.boundary.items()}
    glue = []
    for a, b in (("SW", "NW"), ("SE", "NE"), ("NW", "SW"), ("NE", "SE")):
        ca, cb = t.boundary[a], bd[b]
        if len(ca) != len(cb):
            raise TangleError(f"cable {a} of the tangle and {b} of the closing tangle differ in size")
        # both cables are listed counterclockwise, so facing slots pair in reverse
        glue += [(ca[i], cb[len(cb) - 1 - i]) for i in range(len(ca))]
    return glue_diagram(list(t.crossings) + xs, glue)


def glue_diagram(crossings: Iterable[Sequence[int]], glue: Iterable[tuple[int, int]]) -> PlanarDiagram:
    """Identify arc labels in pairs and build an oriented diagram.

    Labels that end up attached to no crossing form crossingless loops.
    """
    parent: dict[int, int] = {}

    def find(v):
        parent.setdefault(v, v)
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    xs = [tuple(x) for x in crossings]
    for x in xs:
        for v in x:
            find(v)
    for u, v in glue:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    used = {find(v) for x in xs for v in x}
    loops = len({find(v) for v in parent} - used)
    if not xs:
        return PlanarDiagram((), loops=loops)
    ren: dict[int, int] = {}
    new = []
    for x in xs:
        q = []
        for v in x:
            r = find(v)
            if r not in ren:
                ren[r] = len(ren) + 1
            q.append(ren[r])
        new.append(tuple(q))
    d = PlanarDiagram.from_unoriented(new, loops=loops)
    return d.standard_labels() if d.loops == 0 else d


# -- text format ---------------------------------------------------------------
_B = re.compile(r"^\s*B\s+(.*)$")
_S = re.compile(r"^\s*S\s+(.*)$")
_F = re.compile(r"^\s*F\s+(-?\d+)\s+(-?\d+)\s*$")


def parse_tangle(text: str) -> Tangle:
    """Parse the tangle text format.

    ::

        B NW=1 NE=4 SW=2 SE=3
        S (NW,NE) (SW,SE)
        X(1,2,3,4) ...

    Cables are written ``NW=1,2,3``.  An optional ``F a b`` line sets the
    string framings.  ``#`` starts a comment.
    """
    from ..diagram.pd import _TERM

    boundary = None
    strings = None
    framing = (0, 0)
    xs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _B.match(line)
        if m:
            boundary = {}
            for item in m.group(1).split():
                try:
                    key, val = item.split("=")
                    boundary[key.strip().upper()] = tuple(int(v) for v in val.split(","))
                except ValueError:
                    raise TangleError(f"line {lineno}: bad boundary item {item!r}") from None
            if sorted(boundary) != sorted(POSITIONS):
                raise TangleError(f"line {lineno}: boundary must name NW, NE, SW and SE")
            continue
        m = _S.match(line)
        if m:
            pairs = re.findall(r"\(\s*([NS][EW])\s*,\s*([NS][EW])\s*\)", m.group(1).upper())
            if len(pairs) != 2:
                raise TangleError(f"line {lineno}: expected two string pairs")
            strings = tuple(pairs)
            continue
        m = _F.match(line)
        if m:
            framing = (int(m.group(1)), int(m.group(2)))
            continue
        pos = 0
        for term in _TERM.finditer(line):
            if line[pos:term.start()].strip():
                raise TangleError(f"line {lineno}: unexpected text {line[pos:term.start()].strip()!r}")
            xs.append(tuple(int(g) for g in term.groups()))
            pos = term.end()
        if line[pos:].strip():
            raise TangleError(f"line {lineno}: unexpected text {line[pos:].strip()!r}")
    if boundary is None:
        raise TangleError("missing boundary line 'B NW=.. NE=.. SW=.. SE=..'")
    if strings is None:
        strings = _infer_strings(xs, boundary)
    return Tangle(tuple(xs), boundary, strings, framing)


def _infer_strings(xs, boundary):
    counts: dict[int, int] = {}
    for v in [v for x in xs for v in x] + [v for c in boundary.values() for v in c]:
        counts[v] = counts.get(v, 0) + 1
    bad = sorted(v for v, k in counts.items() if k != 2)
    if bad:
        raise TangleError(f"labels {bad} do not occur exactly twice")
    probe = Tangle.__new__(Tangle)
    object.__setattr__(probe, "crossings", tuple(tuple(x) for x in xs))
    object.__setattr__(probe, "boundary", {p: tuple(boundary[p]) for p in POSITIONS})
    (p, _), (q, _) = probe.strand_ends()[0]
    rest = tuple(r for r in _CANON if r not in (p, q))
    return ((p, q), rest)


def format_tangle(t: Tangle) -> str:
    parts = " ".join(f"{p}={','.join(str(v) for v in t.boundary[p])}" for p in _CANON)
    lines = [f"B {parts}", "S " + " ".join(f"({p},{q})" for p, q in t.strings)]
    if any(t.framing):
        lines.append(f"F {t.framing[0]} {t.framing[1]}")
    if t.crossings:
        lines.append(" ".join(f"X({a},{b},{c},{d})" for a, b, c, d in t.crossings))
    return "\n".join(lines)
