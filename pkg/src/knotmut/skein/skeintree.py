"""Skein-tree evaluation of the HOMFLY-PT and Kauffman polynomials.

A diagram is walked from base points; the first crossing met on its
under-strand is resolved by the skein relation (switch it, or smooth it),
and the recursion continues on the children.  A diagram with no such
crossing is descending, hence an unlink.  Reidemeister I kinks are
removed eagerly, split diagrams factor, and results are memoized on a
relabeling of the diagram along its chosen walk.

Internally a crossing is a tuple ``(a, b, c, d, s)`` with the under-strand
at positions 0 and 2.  For the oriented engine ``a`` is the incoming
under-arc and ``s = +1`` when the over-strand runs ``d -> b``; the
unoriented engine ignores ``s``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Sequence

from ..diagram.pd import PlanarDiagram
from .bracket import BudgetExceeded
from .laurent import LaurentPoly2

__all__ = ["homfly", "kauffman_poly", "SkeinEngine", "DEFAULT_NODE_LIMIT"]

DEFAULT_NODE_LIMIT = 10**8

Poly = dict  # {(e1, e2): coefficient}
ONE: Poly = {(0, 0): 1}


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in q.items():
            k = (a1 + a2, b1 + b2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _add(*ps: Poly) -> Poly:
    out: Poly = {}
    for p in ps:
        for k, c in p.items():
            out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def _pow(p: Poly, n: int) -> Poly:
    out = ONE
    for _ in range(n):
        out = _mul(out, p)
    return out


def _splice(xs: Sequence[tuple], removed: Sequence[int], joins: Sequence[tuple[int, int]]):
    """Delete crossings ``removed``, connecting arcs in pairs ``joins``.

    Returns the remaining crossings (arcs renamed) and the number of closed
    loops created.
    """
    parent: dict[int, int] = {}

    def find(v):
        parent.setdefault(v, v)
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for p, q in joins:
        rp, rq = find(p), find(q)
        if rp != rq:
            parent[rp] = rq
    rem = set(removed)
    keep = [x for i, x in enumerate(xs) if i not in rem]
    outside = {v for x in keep for v in x[:4]}
    classes = {find(v) for v in parent}
    touched = {find(v) for v in parent if v in outside}
    loops = len(classes - touched)
    # each touched class meets the outside at exactly two arc ends; give it one name
    rename = {}
    for v in parent:
        if v in outside:
            r = find(v)
            rename.setdefault(r, v)
    new = []
    for x in keep:
        new.append(tuple(rename[find(v)] if v in parent else v for v in x[:4]) + x[4:])
    return new, loops


def _other_table(xs):
    where: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(xs):
        for p in range(4):
            where.setdefault(x[p], []).append((ci, p))
    other = {}
    for s1, s2 in where.values():
        other[s1] = s2
        other[s2] = s1
    return other


def _cycles(xs, other, oriented: bool):
    """Components as lists of visits ``(crossing, entry position)``."""
    seen = set()
    comps = []
    starts = []
    for ci, x in enumerate(xs):
        starts.append((ci, 2))
        if oriented:
            starts.append((ci, 1 if x[4] > 0 else 3))
        else:
            starts.append((ci, 1))
    for st in starts:
        if st in seen:
            continue
        visits = []
        slot = st
        while True:
            seen.add(slot)
            cj, q = other[slot]
            seen.add((cj, q))
            visits.append((cj, q))
            slot = (cj, (q + 2) % 4)
            if slot == st:
                break
        comps.append(visits)
    return comps


def _bad_counts(visits):
    """Bad (under-first) self-crossings for each rotation of a visit cycle."""
    length = len(visits)
    first: dict[int, int] = {}
    pairs = []
    for t, (ci, q) in enumerate(visits):
        if ci in first:
            pairs.append((first[ci], t))
        else:
            first[ci] = t
    counts = [0] * length
    for i, j in pairs:
        ui = visits[i][1] % 2 == 0
        uj = visits[j][1] % 2 == 0
        # starts in (i, j] see j first
        for t in range(length):
            first_is_j = i < t <= j
            if (uj if first_is_j else ui):
                counts[t] += 1
    return counts


class SkeinEngine:
    """Shared skein-tree machinery; subclasses define the relation."""

    oriented = True
    delta: Poly = ONE

    def __init__(self, node_limit: int = DEFAULT_NODE_LIMIT):
        self.node_limit = node_limit
        self.nodes = 0
        self.memo: dict[tuple, Poly] = {}

    # -- hooks ---------------------------------------------------------------
    def kink_factor(self, x: tuple, labels: tuple[int, int]) -> Poly:
        return ONE

    def leaf(self, xs, comps, route) -> Poly:
        raise NotImplementedError

    def branch(self, xs, ci: int) -> list[tuple[Poly, list, int]]:
        raise NotImplementedError

    # -- evaluation ------------------------------------------------------------
    def evaluate(self, xs: list[tuple], loops: int = 0) -> Poly:
        if not xs:
            if loops == 0:
                raise ValueError("empty diagram")
            return _pow(self.delta, loops - 1)
        return _mul(_pow(self.delta, loops), self._eval(xs))

    def _eval(self, xs: list[tuple]) -> Poly:
        """Value of a non-empty diagram without free loops."""
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise BudgetExceeded(f"skein tree exceeded {self.node_limit} nodes")
        factor = ONE
        xs = list(xs)
        loops = 0
        # Reidemeister I
        changed = True
        while changed and xs:
            changed = False
            for ci, x in enumerate(xs):
                for p in range(4):
                    if x[p] == x[(p + 1) % 4]:
                        factor = _mul(factor, self.kink_factor(x, (p, (p + 1) % 4)))
                        xs, lp = _splice(xs, [ci], [(x[0], x[2]), (x[1], x[3])])
                        loops += lp
                        changed = True
                        break
                if changed:
                    break
        if not xs:
            return _mul(factor, _pow(self.delta, loops - 1))
        factor = _mul(factor, _pow(self.delta, loops))
        pieces = self._split(xs)
        if len(pieces) > 1:
            out = _mul(factor, _pow(self.delta, len(pieces) - 1))
            for piece in pieces:
                out = _mul(out, self._eval(piece))
            return out
        key, canon, comps, route = self._canonical(xs)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._resolve(canon, comps, route)
            self.memo[key] = hit
        return _mul(factor, hit)

    def _split(self, xs):
        parent = list(range(len(xs)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        owner: dict[int, int] = {}
        for ci, x in enumerate(xs):
            for v in x[:4]:
                if v in owner:
                    parent[find(ci)] = find(owner[v])
                else:
                    owner[v] = ci
        groups: dict[int, list] = {}
        for ci, x in enumerate(xs):
            groups.setdefault(find(ci), []).append(x)
        return list(groups.values())

    def _resolve(self, xs, comps, route) -> Poly:
        bad = None
        seen = set()
        for ci, q in route:
            if ci not in seen:
                seen.add(ci)
                if q % 2 == 0:
                    bad = ci
                    break
        if bad is None:
            return self.leaf(xs, comps, route)
        terms = []
        for coeff, child, child_loops in self.branch(xs, bad):
            if coeff:
                terms.append(_mul(coeff, self.evaluate(child, child_loops)))
        return _add(*terms)

    def _canonical(self, xs):
        """Pick base points with fewest bad crossings; relabel along the walk."""
        other = _other_table(xs)
        comps = _cycles(xs, other, self.oriented)
        options = []  # per component: list of (visits rotated) achieving min self-bad count
        for visits in comps:
            cand = []
            dirs = [visits]
            if not self.oriented:
                rev = [(ci, (q + 2) % 4) for ci, q in reversed(visits)]
                dirs.append(rev)
            for vs in dirs:
                counts = _bad_counts(vs)
                for t, cnt in enumerate(counts):
                    cand.append((cnt, vs[t:] + vs[:t]))
            best = min(c for c, _ in cand)
            options.append([vs for c, vs in cand if c == best])
        k = len(comps)
        comp_of = {}
        for idx, visits in enumerate(comps):
            for ci, q in visits:
                comp_of.setdefault(ci, set()).add(idx)
        # order components: an earlier component should pass over later ones
        if k == 1:
            orders = [(0,)]
        else:
            under_of = {}
            for idx, visits in enumerate(comps):
                for ci, q in visits:
                    if len(comp_of[ci]) == 2 and q % 2 == 0:
                        under_of[ci] = idx
            over_of = {}
            for idx, visits in enumerate(comps):
                for ci, q in visits:
                    if len(comp_of[ci]) == 2 and q % 2 == 1:
                        over_of[ci] = idx

            def cost(order):
                pos = {c: i for i, c in enumerate(order)}
                return sum(1 for ci in under_of if pos[under_of[ci]] < pos[over_of[ci]])

            if k <= 5:
                allo = list(permutations(range(k)))
                costs = [cost(o) for o in allo]
                m = min(costs)
                orders = [o for o, c in zip(allo, costs) if c == m]
            else:
                orders = [self._greedy_order(k, under_of, over_of)]
        best_key = None
        best = None
        budget = 256
        for order in orders:
            combos = [[]]
            for idx in order:
                combos = [c + [v] for c in combos for v in options[idx]]
                if len(combos) > budget:
                    combos = combos[:budget]
            for combo in combos:
                route = [v for vs in combo for v in vs]
                key, canon, new_route = self._relabel(xs, route)
                if best_key is None or key < best_key:
                    best_key, best = key, (canon, new_route)
        canon, new_route = best
        return best_key, canon, k, new_route

    @staticmethod
    def _greedy_order(k, under_of, over_of):
        remaining = set(range(k))
        order = []
        while remaining:
            # next: the component passing under the fewest remaining others
            def unders(c):
                return sum(1 for ci, u in under_of.items() if u == c and over_of[ci] in remaining and over_of[ci] != c)
            c = min(remaining, key=lambda c: (unders(c), c))
            order.append(c)
            remaining.remove(c)
        return order

    def _relabel(self, xs, route):
        # the arc entering visit t gets label t+1
        label = {}
        for t, (ci, q) in enumerate(route):
            label[xs[ci][q]] = t + 1
        order = {}
        for t, (ci, q) in enumerate(route):
            order.setdefault(ci, t)
        idx = sorted(range(len(xs)), key=lambda ci: order[ci])
        newpos = {ci: i for i, ci in enumerate(idx)}
        canon = []
        for ci in idx:
            x = xs[ci]
            y = tuple(label[v] for v in x[:4])
            if not self.oriented and y[2] < y[0] or (not self.oriented and y[2] == y[0] and y[3] < y[1]):
                y = (y[2], y[3], y[0], y[1])
            canon.append(y + tuple(x[4:]))
        new_route = [(newpos[ci], q) for ci, q in route]
        if not self.oriented:
            # positions may have rotated by two
            fixed = []
            for ci, q in route:
                x = xs[ci]
                y = canon[newpos[ci]]
                rotated = label[x[0]] != y[0] or label[x[1]] != y[1]
                fixed.append((newpos[ci], (q + 2) % 4 if rotated else q))
            new_route = fixed
        return tuple(canon), canon, new_route


class _Homfly(SkeinEngine):
    """``l^-1 P(L+) - l P(L-) = m P(L0)``; unknot 1."""

    oriented = True
    delta = {(-1, -1): 1, (1, -1): -1}

    def leaf(self, xs, comps, route):
        return _pow(self.delta, comps - 1)

    def branch(self, xs, ci):
        a, b, c, d, s = xs[ci]
        if s > 0:
            switched = (d, a, b, c, -1)
            joins = [(a, b), (d, c)]
            c_sw, c_sm = {(2, 0): 1}, {(1, 1): 1}
        else:
            switched = (b, c, d, a, 1)
            joins = [(a, d), (b, c)]
            c_sw, c_sm = {(-2, 0): 1}, {(-1, 1): -1}
        sw = list(xs)
        sw[ci] = switched
        smoothed, loops = _splice(xs, [ci], joins)
        return [(c_sw, sw, 0), (c_sm, smoothed, loops)]


class _Kauffman(SkeinEngine):
    """``L(+) + L(-) = z (L(0) + L(inf))``, positive kink ``a``, unknot 1."""

    oriented = False
    delta = {(1, -1): 1, (-1, -1): 1, (0, 0): -1}

    def kink_factor(self, x, labels):
        p, _ = labels
        # the loop arc at positions {0,1} or {2,3} makes a positive curl
        return {(1, 0): 1} if p in (0, 2) else {(-1, 0): 1}

    def leaf(self, xs, comps, route):
        # descending: unlink with writhe read off the walk orientation
        under_in = {}
        over_in = {}
        for ci, q in route:
            if q % 2 == 0:
                under_in[ci] = q
            else:
                over_in[ci] = q
        w = 0
        for ci in range(len(xs)):
            u, o = under_in[ci], over_in[ci]
            if u == 2:
                o = (o + 2) % 4
            w += 1 if o == 3 else -1
        return _mul({(w, 0): 1}, _pow(self.delta, comps - 1))

    def branch(self, xs, ci):
        a, b, c, d = xs[ci][:4]
        sw = list(xs)
        sw[ci] = (b, c, d, a)
        sa, la = _splice(xs, [ci], [(a, b), (c, d)])
        sb, lb = _splice(xs, [ci], [(a, d), (b, c)])
        return [({(0, 0): -1}, sw, 0), ({(0, 1): 1}, sa, la), ({(0, 1): 1}, sb, lb)]


def _internal(d: PlanarDiagram, oriented: bool) -> list[tuple]:
    if oriented:
        return [tuple(x) + (s,) for x, s in zip(d.crossings, d.signs)]
    return [tuple(x) for x in d.crossings]


def homfly(d: PlanarDiagram, node_limit: int = DEFAULT_NODE_LIMIT) -> LaurentPoly2:
    """HOMFLY-PT polynomial ``P(l, m)`` with ``l^-1 P(L+) - l P(L-) = m P(L0)``.

    In terms of the Lickorish-Millett form ``P_LM`` (``l P(L+) + l^-1 P(L-)
    + m P(L0) = 0``) this is ``P_LM(i l^-1, -i m)``.
    """
    eng = _Homfly(node_limit)
    val = eng.evaluate(_internal(d, True), d.loops)
    return LaurentPoly2(val, ("l", "m"))


def kauffman_poly(d: PlanarDiagram, node_limit: int = DEFAULT_NODE_LIMIT) -> LaurentPoly2:
    """Kauffman polynomial ``F(a, z) = a^-w Lambda(D)``."""
    eng = _Kauffman(node_limit)
    val = eng.evaluate(_internal(d, False), d.loops)
    w = sum(d.signs)
    return LaurentPoly2(_mul({(-w, 0): 1}, val), ("a", "z"))
