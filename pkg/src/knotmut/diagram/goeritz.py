"""Goeritz matrix and the Gordon-Litherland signature.

Faces of the diagram are two-coloured; the shaded faces with the twisted
bands at the crossings form a spanning surface, and the unshaded faces
index the Goeritz matrix.  At each crossing ``eta = +1`` when the unshaded
corners are the ones swept by turning the over-strand clockwise onto the
under-strand.  A crossing is of type II when the oriented smoothing merges
its two shaded corners; the correction term is the sum of ``eta`` over
type II crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .pd import DiagramError, PlanarDiagram

__all__ = ["GoeritzData", "checkerboard", "goeritz", "signature", "matrix_signature"]


@dataclass(frozen=True)
class GoeritzData:
    matrix: tuple[tuple[int, ...], ...]
    correction: int

    @property
    def signature(self) -> int:
        return matrix_signature(self.matrix) - self.correction


def checkerboard(d: PlanarDiagram) -> list[int]:
    """Two-colouring of ``d.faces`` (0 or 1); face 0 gets colour 0."""
    faces = d.faces
    face_of = {slot: fi for fi, f in enumerate(faces) for slot in f}
    colour = [-1] * len(faces)
    adj: list[list[int]] = [[] for _ in faces]
    for s1, s2 in d.slots.values():
        # the two faces on either side of an edge depart along it from opposite ends
        f1, f2 = face_of[s1], face_of[s2]
        adj[f1].append(f2)
        adj[f2].append(f1)
    for root in range(len(faces)):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            f = stack.pop()
            for g in adj[f]:
                if colour[g] < 0:
                    colour[g] = 1 - colour[f]
                    stack.append(g)
                elif colour[g] == colour[f]:
                    raise DiagramError("faces do not admit a checkerboard colouring")
    return colour


def _default_unshaded(d: PlanarDiagram, colour: list[int]) -> int:
    # treat the largest face (first on ties) as the unbounded one and leave it unshaded
    faces = d.faces
    big = max(range(len(faces)), key=lambda fi: (len(faces[fi]), -fi))
    return colour[big]


def goeritz(d: PlanarDiagram, unshaded: int | None = None) -> GoeritzData:
    """Goeritz matrix on the faces of colour ``unshaded`` with one face deleted.

    The deleted row and column belong to the unshaded face listed last.
    """
    if not d.crossings:
        return GoeritzData((), 0)
    colour = checkerboard(d)
    if unshaded is None:
        unshaded = _default_unshaded(d, colour)
    faces = d.faces
    white = [fi for fi in range(len(faces)) if colour[fi] == unshaded]
    windex = {fi: k for k, fi in enumerate(white)}
    # face containing the corner between positions k-1 and k of crossing ci
    corner = {slot: fi for fi, f in enumerate(faces) for slot in f}
    size = len(white)
    g = [[0] * size for _ in range(size)]
    correction = 0
    for ci, s in enumerate(d.signs):
        even_white = colour[corner[(ci, 0)]] == unshaded
        eta = -1 if even_white else 1
        if even_white:
            w1, w2 = windex[corner[(ci, 0)]], windex[corner[(ci, 2)]]
        else:
            w1, w2 = windex[corner[(ci, 1)]], windex[corner[(ci, 3)]]
        if w1 != w2:
            g[w1][w2] -= eta
            g[w2][w1] -= eta
            g[w1][w1] += eta
            g[w2][w2] += eta
        # the oriented smoothing of a positive crossing merges corners 0 and 2
        merged_even = s > 0
        if merged_even != even_white:
            correction += eta
    reduced = tuple(tuple(row[:-1]) for row in g[:-1])
    return GoeritzData(reduced, correction)


def matrix_signature(m) -> int:
    """Signature of a symmetric rational matrix by exact congruence diagonalisation."""
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    for row in a:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(i)):
        raise ValueError("matrix is not symmetric")
    sig = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/column operation i += j makes the diagonal entry 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        piv = a[p][p]
        sig += 1 if piv > 0 else -1
        active.remove(p)
        for i in active:
            f = a[i][p] / piv
            if f:
                for k in active:
                    a[i][k] -= f * a[p][k]
        for i in active:
            a[i][p] = a[p][i] = Fraction(0)
    return sig


def signature(d: PlanarDiagram) -> int:
    """Knot signature, normalized so the positive (right-handed) trefoil has signature -2."""
    if d.n_components != 1:
        raise DiagramError("signature is implemented for knots only")
    return goeritz(d).signature
