"""Alexander polynomial from the Wirtinger presentation.

Each crossing contributes one Fox-calculus row in the over-arc, incoming
under-arc and outgoing under-arc generators.  Deleting one row and column
leaves a square matrix with entries of degree at most one in ``t``; its
determinant is found by exact evaluation at integer points followed by
interpolation, then normalized to the symmetric Conway form.
"""

from __future__ import annotations

from fractions import Fraction

from ..diagram.pd import DiagramError, PlanarDiagram
from .laurent import LaurentPoly

__all__ = ["alexander", "alexander_matrix", "bareiss_det"]


def _arc_classes(d: PlanarDiagram) -> dict[int, int]:
    """Map each edge label to its Wirtinger generator (over-arcs merge b and d)."""
    parent = {lab: lab for lab in d.slots}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for _, b, _, e in d.crossings:
        parent[find(b)] = find(e)
    roots = sorted({find(v) for v in parent})
    index = {r: i for i, r in enumerate(roots)}
    return {v: index[find(v)] for v in parent}


def alexander_matrix(d: PlanarDiagram) -> list[list[tuple[int, int]]]:
    """Rows of ``(c0, c1)`` pairs meaning ``c0 + c1 t``, one row per crossing."""
    cls = _arc_classes(d)
    n = len(d.crossings)
    rows = []
    for (a, b, c, _), s in zip(d.crossings, d.signs):
        row = [[0, 0] for _ in range(n)]
        j, i, k = cls[b], cls[a], cls[c]
        # Fox derivatives of k = j i j^-1 (positive) or k = j^-1 i j (negative,
        # multiplied through by t)
        if s > 0:
            row[j][0] += 1
            row[j][1] -= 1
            row[i][1] += 1
            row[k][0] -= 1
        else:
            row[j][0] -= 1
            row[j][1] += 1
            row[i][0] += 1
            row[k][1] -= 1
        rows.append([tuple(e) for e in row])
    return rows


def bareiss_det(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _interpolate(xs: list[int], ys: list[int]) -> list[int]:
    """Integer coefficients (low to high) of the polynomial through the points."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        # Lagrange basis polynomial for xs[i]
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += Fraction(ys[i], denom) * basis[k]
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated determinant is not integral")
    return [int(c) for c in coeffs]


def alexander(d: PlanarDiagram) -> LaurentPoly:
    """Symmetric Alexander polynomial with ``Delta(1) = 1``."""
    if d.n_components != 1:
        raise DiagramError("the Alexander polynomial is implemented for knots only")
    n = len(d.crossings)
    if n < 2:
        return LaurentPoly.const(1)
    rows = alexander_matrix(d)
    minor = [r[:-1] for r in rows[:-1]]
    size = n - 1
    xs = list(range(2, size + 3))
    ys = [bareiss_det([[c0 + c1 * x for c0, c1 in r] for r in minor]) for x in xs]
    poly = LaurentPoly(enumerate(_interpolate(xs, ys)))
    if not poly.terms:
        raise ArithmeticError("Alexander minor vanished; diagram is not a knot diagram")
    lo, hi = poly.min_degree(), poly.max_degree()
    if (lo + hi) % 2:
        raise ArithmeticError("Alexander polynomial of a knot must have even span")
    poly = poly.shift(-(lo + hi) // 2)
    if poly(1) < 0:
        poly = -poly
    if poly(1) != 1:
        raise ArithmeticError(f"Alexander polynomial normalization failed: Delta(1) = {poly(1)}")
    return poly
