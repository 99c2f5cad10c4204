"""The Khovanov cube of resolutions, built one quantum grading at a time.

For ``X(a, b, c, d)`` the 0-smoothing joins ``(a, b)`` and ``(c, d)`` (the
bracket's A-smoothing) and the 1-smoothing joins ``(a, d)`` and ``(b, c)``.
A state is a bitmask of 1-smoothed crossings; a generator is a state with
a bitmask over its loops, a set bit labelling the loop ``x`` and a clear
bit labelling it ``1``.  Gradings follow Bar-Natan:

    i = r - n_-,   j = (#1 - #x) + r + n_+ - 2 n_-,

with ``r`` the number of 1-smoothings.  Edge maps are multiplication and
comultiplication in ``Z[x]/x^2`` with the sign ``(-1)^(#1-smoothings
before the changing crossing)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..diagram.pd import DiagramError, PlanarDiagram
from ..skein.bracket import BudgetExceeded

__all__ = ["ResolutionState", "Cube", "GradedComplex", "DEFAULT_MAX_CROSSINGS"]

DEFAULT_MAX_CROSSINGS = 16


@dataclass(frozen=True)
class ResolutionState:
    """A vertex of the cube: smoothing bitmask, loop count and loop id of each arc."""

    mask: int
    n_loops: int
    arc_loop: tuple[int, ...]

    @property
    def n_generators(self) -> int:
        return 1 << self.n_loops


@dataclass
class GradedComplex:
    """One quantum grading of the cube.

    ``gens[i]`` lists generator keys ``(state, loop mask)`` in homological
    degree ``i``; ``diff[x]`` maps a generator index to ``{target index:
    coefficient}``.
    """

    j: int
    gens: dict[int, list[tuple[int, int]]]
    index: dict[tuple[int, int], int]
    degree: list[int]
    diff: list[dict[int, int]]

    @property
    def size(self) -> int:
        return len(self.degree)


class Cube:
    def __init__(self, d: PlanarDiagram, reduced: bool = False, max_crossings: int = DEFAULT_MAX_CROSSINGS,
                 base_arc: int | None = None):
        if d.n_components != 1:
            raise DiagramError("Khovanov homology is implemented for knots only")
        n = len(d.crossings)
        if n > max_crossings:
            raise BudgetExceeded(f"{n} crossings exceeds the Khovanov budget of {max_crossings}")
        self.d = d
        self.n = n
        self.reduced = reduced
        self.n_plus = sum(1 for s in d.signs if s > 0)
        self.n_minus = n - self.n_plus
        labels = sorted({v for x in d.crossings for v in x})
        self.arc_index = {v: k for k, v in enumerate(labels)}
        self.xs = [tuple(self.arc_index[v] for v in x) for x in d.crossings]
        if base_arc is None:
            base_arc = labels[0] if labels else 0
        self.base = self.arc_index.get(base_arc, 0)
        self.states = [self._resolve(s) for s in range(1 << n)]
        self._edges: dict[tuple[int, int], tuple] = {}

    # -- states --------------------------------------------------------------
    def _resolve(self, s: int) -> ResolutionState:
        narcs = len(self.arc_index)
        parent = list(range(narcs))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for k, (a, b, c, e) in enumerate(self.xs):
            if s >> k & 1:
                pairs = ((a, e), (b, c))
            else:
                pairs = ((a, b), (c, e))
            for p, q in pairs:
                rp, rq = find(p), find(q)
                if rp != rq:
                    parent[rp] = rq
        ids: dict[int, int] = {}
        arc_loop = []
        for v in range(narcs):
            r = find(v)
            if r not in ids:
                ids[r] = len(ids)
            arc_loop.append(ids[r])
        return ResolutionState(s, len(ids), tuple(arc_loop))

    def edge(self, s: int, k: int):
        """Edge data for changing crossing ``k`` in state ``s``.

        Returns ``(target, sign, kind, loop_map, extra)``: ``kind`` is
        ``"m"`` (merge of loops ``extra = (p, q)``) or ``"d"`` (split of loop
        ``extra[0]`` into target loops ``extra[1], extra[2]``); ``loop_map``
        sends every other source loop to its target loop.
        """
        key = (s, k)
        hit = self._edges.get(key)
        if hit is not None:
            return hit
        t = s | (1 << k)
        src, dst = self.states[s], self.states[t]
        a, b, c, _ = self.xs[k]
        sign = -1 if bin(s & ((1 << k) - 1)).count("1") % 2 else 1
        reps = [-1] * src.n_loops
        for arc, lp in enumerate(src.arc_loop):
            if reps[lp] < 0:
                reps[lp] = arc
        loop_map = [dst.arc_loop[arc] for arc in reps]
        la, lc = src.arc_loop[a], src.arc_loop[c]
        if la != lc:
            out = (t, sign, "m", tuple(loop_map), (la, lc))
        else:
            out = (t, sign, "d", tuple(loop_map), (la, dst.arc_loop[a], dst.arc_loop[b]))
        self._edges[key] = out
        return out

    # -- gradings ------------------------------------------------------------
    def jshift(self) -> int:
        return self.n_plus - 2 * self.n_minus

    def quantum_gradings(self) -> list[int]:
        js = set()
        for st in self.states:
            r = bin(st.mask).count("1")
            k = st.n_loops
            lo = 1 if self.reduced else 0
            for p in range(lo, k + 1):
                js.add(k - 2 * p + r + self.jshift())
        return sorted(js)

    def _masks(self, st: ResolutionState, r: int, j: int):
        k = st.n_loops
        twice_p = k + r + self.jshift() - j
        if twice_p % 2:
            return []
        p = twice_p // 2
        if p < 0 or p > k:
            return []
        if self.reduced:
            marked = st.arc_loop[self.base]
            if p < 1:
                return []
            others = [lp for lp in range(k) if lp != marked]
            base = 1 << marked
            return [base | sum(1 << lp for lp in c) for c in combinations(others, p - 1)]
        return [sum(1 << lp for lp in c) for c in combinations(range(k), p)]

    def complex(self, j: int) -> GradedComplex:
        """The subcomplex in quantum grading ``j`` (``j`` unshifted for reduced)."""
        gens: dict[int, list[tuple[int, int]]] = {}
        index: dict[tuple[int, int], int] = {}
        degree: list[int] = []
        for st in self.states:
            r = bin(st.mask).count("1")
            for m in self._masks(st, r, j):
                i = r - self.n_minus
                index[(st.mask, m)] = len(degree)
                degree.append(i)
                gens.setdefault(i, []).append((st.mask, m))
        diff: list[dict[int, int]] = [dict() for _ in degree]
        n = self.n
        for (s, m), x in index.items():
            row = diff[x]
            for k in range(n):
                if s >> k & 1:
                    continue
                t, sign, kind, loop_map, extra = self.edge(s, k)
                if kind == "m":
                    p, q = extra
                    bp, bq = m >> p & 1, m >> q & 1
                    if bp and bq:
                        continue
                    new = 0
                    for lp, tl in enumerate(loop_map):
                        if lp != p and lp != q and m >> lp & 1:
                            new |= 1 << tl
                    if bp or bq:
                        new |= 1 << loop_map[p]
                    y = index[(t, new)]
                    row[y] = row.get(y, 0) + sign
                else:
                    src, t1, t2 = extra
                    new = 0
                    for lp, tl in enumerate(loop_map):
                        if lp != src and m >> lp & 1:
                            new |= 1 << tl
                    if m >> src & 1:
                        targets = [new | (1 << t1) | (1 << t2)]
                    else:
                        targets = [new | (1 << t1), new | (1 << t2)]
                    for tm in targets:
                        key = (t, tm)
                        y = index[key]
                        row[y] = row.get(y, 0) + sign
        for row in diff:
            for y in [y for y, c in row.items() if c == 0]:
                del row[y]
        return GradedComplex(j, gens, index, degree, diff)
