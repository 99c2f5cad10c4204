"""Integral homology of the Khovanov complex.

Each quantum grading is handled separately.  Differential entries equal
to ``+-1`` are cancelled first (Gaussian elimination on the chain complex:
the pair ``x -> y`` is removed and every ``z -> y``, ``x -> u`` pair picks
up the zig-zag correction).  What survives has no unit entries and is
small; its homology comes from Smith normal forms.
"""

from __future__ import annotations

import random

from ..diagram.pd import PlanarDiagram
from .complex import DEFAULT_MAX_CROSSINGS, Cube, GradedComplex
from .groups import BigradedGroups

__all__ = ["khovanov", "smith_invariants", "check_d_squared", "rank_mod_p", "complex_homology",
           "D2_EXHAUSTIVE_LIMIT"]

# complexes up to this many generators get an exact d^2 check, larger ones a randomized one
D2_EXHAUSTIVE_LIMIT = 5_000_000


def smith_invariants(rows: list[list[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix (in divisibility order)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    a = [r for r in a]
    out = []
    while a and ncols:
        # pivot: entry of smallest absolute value
        best = None
        for i, r in enumerate(a):
            for j, v in enumerate(r):
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
                    if abs(v) == 1:
                        break
            if best and abs(a[best[0]][best[1]]) == 1:
                break
        if best is None:
            break
        pi, pj = best
        a[0], a[pi] = a[pi], a[0]
        for r in a:
            r[0], r[pj] = r[pj], r[0]
        while True:
            p = a[0][0]
            dirty = False
            for i in range(1, len(a)):
                if a[i][0]:
                    q = a[i][0] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[0])]
                    if a[i][0]:
                        dirty = True
            for j in range(1, ncols):
                if a[0][j]:
                    q = a[0][j] // p
                    for r in a:
                        r[j] -= q * r[0]
                    if a[0][j]:
                        dirty = True
            if not dirty:
                # the pivot must divide the rest of the matrix
                bad = next(((i, j) for i in range(1, len(a)) for j in range(1, ncols) if a[i][j] % p), None)
                if bad is None:
                    break
                a[0] = [x + y for x, y in zip(a[0], a[bad[0]])]
                continue
            # move the smallest entry of the first row/column to the pivot
            cand = [(abs(a[i][0]), i, 0) for i in range(len(a)) if a[i][0]]
            cand += [(abs(a[0][j]), 0, j) for j in range(ncols) if a[0][j]]
            _, i, j = min(cand)
            if i:
                a[0], a[i] = a[i], a[0]
            if j:
                for r in a:
                    r[0], r[j] = r[j], r[0]
        out.append(abs(a[0][0]))
        a = [r[1:] for r in a[1:]]
        a = [r for r in a if any(r)]
        ncols -= 1
    return sorted(out)


def check_d_squared(cx: GradedComplex, trials: int = 2, exhaustive_limit: int | None = None) -> None:
    """Raise if ``d o d != 0``; exhaustive for small complexes, random test vectors otherwise."""
    if exhaustive_limit is None:
        exhaustive_limit = D2_EXHAUSTIVE_LIMIT
    diff = cx.diff
    if cx.size <= exhaustive_limit:
        for x, row in enumerate(diff):
            acc: dict[int, int] = {}
            for y, c in row.items():
                for u, c2 in diff[y].items():
                    acc[u] = acc.get(u, 0) + c * c2
            if any(acc.values()):
                raise ArithmeticError(f"d^2 != 0 in quantum grading {cx.j}")
        return
    rng = random.Random(cx.j)
    for _ in range(trials):
        v = [rng.randrange(1, 1 << 40) for _ in range(cx.size)]
        dv = [0] * cx.size
        for x, row in enumerate(diff):
            vx = v[x]
            for y, c in row.items():
                dv[y] += c * vx
        ddv = [0] * cx.size
        for x, row in enumerate(diff):
            vx = dv[x]
            if vx:
                for y, c in row.items():
                    ddv[y] += c * vx
        if any(ddv):
            raise ArithmeticError(f"d^2 != 0 in quantum grading {cx.j}")


def _cancel(cx: GradedComplex):
    """Gaussian elimination of unit entries; returns surviving generators and differential."""
    out = [dict(r) for r in cx.diff]
    inn: list[dict[int, int]] = [dict() for _ in out]
    for x, row in enumerate(out):
        for y, c in row.items():
            inn[y][x] = c
    alive = [True] * len(out)
    order = sorted(range(len(out)), key=lambda x: (cx.degree[x], len(out[x])))
    for x in order:
        if not alive[x]:
            continue
        while True:
            row = out[x]
            best = None
            for y, c in row.items():
                if c == 1 or c == -1:
                    if best is None or len(inn[y]) < len(inn[best]):
                        best = y
            if best is None:
                break
            y = best
            cxy = row[y]
            # zig-zag: d(z -> u) -= d(z -> y) * d(x -> y)^-1 * d(x -> u)
            xrow = [(u, c) for u, c in row.items() if u != y]
            for z, czy in list(inn[y].items()):
                if z == x:
                    continue
                f = czy * cxy  # inverse of a unit is itself
                zrow = out[z]
                for u, cxu in xrow:
                    v = zrow.get(u, 0) - f * cxu
                    if v:
                        zrow[u] = v
                        inn[u][z] = v
                    else:
                        zrow.pop(u, None)
                        inn[u].pop(z, None)
            # delete x and y with all their entries
            for gen in (x, y):
                for u in out[gen]:
                    if u != x and u != y:
                        inn[u].pop(gen, None)
                for z in inn[gen]:
                    if z != x and z != y:
                        out[z].pop(gen, None)
                out[gen] = {}
                inn[gen] = {}
                alive[gen] = False
            break
    survivors = [x for x in range(len(out)) if alive[x]]
    return survivors, out


def complex_homology(cx: GradedComplex) -> dict[int, tuple[int, tuple[int, ...]]]:
    """``i -> (free rank, torsion orders)`` for one quantum grading."""
    survivors, out = _cancel(cx)
    by_deg: dict[int, list[int]] = {}
    for x in survivors:
        by_deg.setdefault(cx.degree[x], []).append(x)
    invariants: dict[int, list[int]] = {}
    for i, src in by_deg.items():
        tgt = by_deg.get(i + 1, [])
        if not tgt:
            invariants[i] = []
            continue
        pos = {y: k for k, y in enumerate(tgt)}
        mat = [[0] * len(src) for _ in tgt]
        for col, x in enumerate(src):
            for y, c in out[x].items():
                mat[pos[y]][col] = c
        invariants[i] = smith_invariants(mat)
    result = {}
    for i, gens in by_deg.items():
        rank_out = len(invariants.get(i, []))
        incoming = invariants.get(i - 1, [])
        free = len(gens) - rank_out - len(incoming)
        tors = tuple(t for t in incoming if t > 1)
        if free or tors:
            result[i] = (free, tors)
    return result


def rank_mod_p(cx: GradedComplex, p: int = (1 << 61) - 1) -> dict[int, int]:
    """Betti numbers per homological degree from ranks over GF(p); independent of the cancellation."""
    rows_by_deg: dict[int, list[dict[int, int]]] = {}
    for x, row in enumerate(cx.diff):
        if row:
            rows_by_deg.setdefault(cx.degree[x], []).append({y: c % p for y, c in row.items()})
    ranks: dict[int, int] = {}
    for i, rows in rows_by_deg.items():
        pivots: dict[int, dict[int, int]] = {}
        r = 0
        for row in rows:
            row = dict(row)
            while row:
                col = min(row)
                piv = pivots.get(col)
                if piv is None:
                    inv = pow(row[col], p - 2, p)
                    pivots[col] = {k: v * inv % p for k, v in row.items()}
                    r += 1
                    break
                f = row[col]
                for k, v in piv.items():
                    nv = (row.get(k, 0) - f * v) % p
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        ranks[i] = r
    counts: dict[int, int] = {}
    for i in cx.degree:
        counts[i] = counts.get(i, 0) + 1
    betti = {}
    for i, c in counts.items():
        b = c - ranks.get(i, 0) - ranks.get(i - 1, 0)
        if b:
            betti[i] = b
    return betti


def khovanov(d: PlanarDiagram, reduced: bool = False, max_crossings: int = DEFAULT_MAX_CROSSINGS,
             check: bool = True, cross_check: bool = False, stats: dict | None = None) -> BigradedGroups:
    """Integral Khovanov homology of a knot diagram.

    Unreduced: the unknot has ``Z`` at ``(0, -1)`` and ``(0, 1)``.  Reduced:
    the base point lies on the smallest arc label, the marked loop is
    labelled ``x`` and ``j`` is shifted up by one, so the unknot has ``Z``
    at ``(0, 0)``.  ``cross_check`` recomputes Betti numbers over a large
    prime field and compares them with the integral answer.  ``stats``, if
    given, accumulates counts of complexes built and of d^2 checks made
    (exhaustive or randomized).
    """
    if not d.crossings:
        if d.n_components != 1:
            raise ValueError("Khovanov homology is implemented for knots only")
        if reduced:
            return BigradedGroups({(0, 0): (1, ())})
        return BigradedGroups({(0, -1): (1, ()), (0, 1): (1, ())})
    cube = Cube(d, reduced=reduced, max_crossings=max_crossings)
    shift = 1 if reduced else 0
    groups = {}
    for j in cube.quantum_gradings():
        cx = cube.complex(j)
        if check:
            check_d_squared(cx)
        if stats is not None:
            stats["complexes"] = stats.get("complexes", 0) + 1
            if check:
                key = "d2_exhaustive" if cx.size <= D2_EXHAUSTIVE_LIMIT else "d2_randomized"
                stats[key] = stats.get(key, 0) + 1
        hom = complex_homology(cx)
        if cross_check:
            betti = rank_mod_p(cx)
            free = {i: r for i, (r, _) in hom.items() if r}
            if betti != free:
                raise ArithmeticError(f"rank cross-check failed in quantum grading {j}: {free} vs {betti}")
        for i, (r, t) in hom.items():
            groups[(i, j + shift)] = (r, t)
    return BigradedGroups(groups)
