"""Dowker-Thistlethwaite codes: parsing, realization and extraction.

A knot diagram is traversed once, numbering the crossing visits ``1..2n``.
Each crossing is met at one odd and one even visit; the code lists, for
``i = 1, 3, 5, ...``, the even visit paired with ``i``.  The even number is
negative when the strand passes *over* at the even visit.

Realization draws the curve one segment at a time.  The partial drawing is
kept as its face boundary walks; arriving at a crossing for the second
time the new segment must reach the earlier strand through the face that
currently holds the pen, and the side it arrives from fixes the crossing's
handedness.  When both sides are reachable the search branches.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .pd import DiagramError, PlanarDiagram

__all__ = ["DTCode", "DTError", "parse_dt", "format_dt", "realize_dt", "dt_code", "embeddings"]


class DTError(DiagramError):
    """Malformed or non-realizable DT code."""


@dataclass(frozen=True)
class DTCode:
    name: str
    pairs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(int(v) for v in self.pairs))
        n = len(self.pairs)
        evens = sorted(abs(v) for v in self.pairs)
        if evens != list(range(2, 2 * n + 1, 2)):
            raise DTError(f"{self.name or 'code'}: entries must be a signed permutation of 2..{2 * n} step 2")

    @property
    def n_crossings(self) -> int:
        return len(self.pairs)


def parse_dt(text: str) -> DTCode:
    """Parse ``<name> k1 k2 ... kn``; the name is optional, commas and brackets are ignored."""
    s = re.sub(r"[\[\](),]", " ", text.split("#", 1)[0]).split()
    if not s:
        raise DTError("empty DT code")
    name = ""
    if not re.fullmatch(r"-?\d+", s[0]):
        name, s = s[0], s[1:]
    try:
        vals = tuple(int(v) for v in s)
    except ValueError as exc:
        raise DTError(f"non-integer entry in DT code {text!r}") from exc
    if any(v % 2 for v in vals):
        raise DTError(f"DT entries must be even: {text!r}")
    return DTCode(name, vals)


def format_dt(code: DTCode) -> str:
    return (f"{code.name} " if code.name else "") + " ".join(str(v) for v in code.pairs)


def _partner_table(pairs: tuple[int, ...]) -> dict[int, int]:
    partner = {}
    for k, e in enumerate(pairs):
        o = 2 * k + 1
        partner[o] = abs(e)
        partner[abs(e)] = o
    return partner


def embeddings(pairs: tuple[int, ...], first_only: bool = True) -> list[dict[int, bool]]:
    """Planar handedness assignments for the curve described by ``pairs``.

    Returns a list of maps ``first visit -> arrives from the left``.  The
    reflected embedding is not listed separately.
    """
    n = len(pairs)
    partner = _partner_table(pairs)
    for v, w in partner.items():
        if abs(v - w) == 1 or {v, w} == {1, 2 * n}:
            raise DTError("codes with nugatory kinks (consecutive visits) are not supported")
    results: list[dict[int, bool]] = []
    # sides: ("L", j) traversed forward, ("R", j) traversed backward; segment 0
    # runs from the base point S to visit 1, segment j from visit j to j+1,
    # segment 2n from visit 2n back to S.
    faces0 = [[("L", 0), ("R", 0)]]
    tip0 = (0, 1)  # insert between faces[0][0] and faces[0][1]

    def find_pair(faces, s1, s2):
        for fi, walk in enumerate(faces):
            m = len(walk)
            for i in range(m):
                if walk[i] == s1 and walk[(i + 1) % m] == s2:
                    return fi, (i + 1) % m
        return None

    def draw(faces, tip, k, hand):
        # faces: list of walks; tip: (face, insert index) for drawing segment k
        if first_only and results:
            return
        if k == 2 * n:
            # closing segment must reach the base point's corner in the tip face
            fi, _ = tip
            walk = faces[fi]
            m = len(walk)
            if any(walk[i] == ("R", 0) and walk[(i + 1) % m] == ("L", 0) for i in range(m)):
                results.append(dict(hand))
            return
        target = k + 1
        p = partner[target]
        fi, idx = tip
        walk = faces[fi]
        if p > target:
            # fresh point: extend the path inside the same face
            new_walk = walk[:idx] + [("L", k), ("R", k)] + walk[idx:]
            nf = faces[:fi] + [new_walk] + faces[fi + 1:]
            draw(nf, (fi, idx + 1), k + 1, hand)
            return
        # second visit to the point first reached at visit p
        rot = walk[idx:] + walk[:idx]  # starts right after the tip
        junctions = {True: (("L", p - 1), ("L", p)), False: (("R", p), ("R", p - 1))}
        for from_left, (s1, s2) in junctions.items():
            m = len(rot)
            cut = None
            for i in range(m - 1):
                if rot[i] == s1 and rot[i + 1] == s2:
                    cut = i + 1
                    break
            if cut is None:
                continue
            part_a = rot[:cut]   # starts after the tip, ends at p
            part_b = rot[cut:]   # starts at p, ends at the tip
            face_1 = part_b + [("L", k)]
            face_2 = [("R", k)] + part_a
            nf = faces[:fi] + faces[fi + 1:] + [face_1, face_2]
            # continue from the opposite corner at p
            o1, o2 = junctions[not from_left]
            found = find_pair(nf, o1, o2)
            if found is None:
                continue
            gi, gidx = found
            h = dict(hand)
            h[p] = from_left
            draw(nf, (gi, gidx), k + 1, h)
            if first_only and results:
                return

    draw(faces0, tip0, 1, {})
    return results


def realize_dt(code: DTCode | str) -> PlanarDiagram:
    """Build a PD diagram for a DT code; raises :class:`DTError` if it has no planar realization.

    Arc ``j`` runs from visit ``j`` to visit ``j+1`` (arc ``2n`` closes up).
    """
    if isinstance(code, str):
        code = parse_dt(code)
    pairs = code.pairs
    n = len(pairs)
    if n == 0:
        return PlanarDiagram.unknot()
    found = embeddings(pairs)
    if not found:
        raise DTError(f"DT code {code.name or pairs} is not realizable")
    hand = found[0]

    def arc_in(v):
        return 2 * n if v == 1 else v - 1

    xs = []
    for k, e in enumerate(pairs):
        o, ev = 2 * k + 1, abs(e)
        p, q = min(o, ev), max(o, ev)
        in_p, out_p, in_q, out_q = arc_in(p), p, arc_in(q), q
        if hand[p]:
            ring = (in_p, out_q, out_p, in_q)
        else:
            ring = (in_p, in_q, out_p, out_q)
        even_over = e < 0
        under = o if even_over else ev
        r = ring.index(in_p if under == p else in_q)
        xs.append(ring[r:] + ring[:r])
    return PlanarDiagram(tuple(xs))


def dt_code(d: PlanarDiagram, start_arc: int | None = None, name: str = "") -> DTCode:
    """DT code of a knot diagram, walking from the end of ``start_arc``.

    The default start is the arc that realization labels ``2n``.
    """
    if d.n_components != 1:
        raise DTError("DT codes describe knots only")
    if not d.crossings:
        return DTCode(name, ())
    comp = d.components[0]
    n = len(d.crossings)
    if start_arc is None:
        start_arc = max(comp)
    i0 = comp.index(start_arc)
    order = comp[i0:] + comp[:i0]
    # the crossing at the head of each arc
    head = {}
    for ci, x in enumerate(d.crossings):
        head[x[0]] = (ci, "under")
        fwd = d._over_forward[ci]
        head[x[3] if fwd else x[1]] = (ci, "over")
    visits: dict[int, list[tuple[int, str]]] = {}
    for v, lab in enumerate(order, start=1):
        ci, role = head[lab]
        visits.setdefault(ci, []).append((v, role))
    pairs = {}
    for ci, vs in visits.items():
        (v1, r1), (v2, r2) = vs
        if (v1 + v2) % 2 == 0:
            raise DTError("diagram visits a crossing twice with the same parity")
        (odd, _), (even, even_role) = sorted(vs, key=lambda t: t[0] % 2 == 0)
        pairs[odd] = -even if even_role == "over" else even
    return DTCode(name, tuple(pairs[o] for o in range(1, 2 * n, 2)))
