"""Kauffman bracket and Jones polynomial.

The bracket is evaluated by a sweep: vertices (crossings, or any planar box
given as a weighted sum of crossingless matchings) are absorbed one at a
time.  The running state is a linear combination of matchings of the arcs
currently cut by the sweep line; because every absorbed piece is planar,
these matchings are exactly the Temperley-Lieb basis of the cut.  Closed
loops contribute ``delta = -A^2 - A^-2``.

Smoothing convention for ``X(a, b, c, d)``: the A-smoothing joins ``(a, b)``
and ``(c, d)``, the B-smoothing joins ``(a, d)`` and ``(b, c)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..diagram.pd import PlanarDiagram, writhe
from .laurent import LaurentPoly

__all__ = [
    "BudgetExceeded",
    "Vertex",
    "sweep_order",
    "sweep_evaluate",
    "kauffman_bracket",
    "bracket_state_sum",
    "jones",
    "jones_from_bracket",
    "DEFAULT_MAX_WIDTH",
]

DEFAULT_MAX_WIDTH = 20

# Laurent polynomials in A are plain ``{exponent: coefficient}`` dicts in the
# hot loop.
Poly = dict

DELTA: Poly = {2: -1, -2: -1}


class BudgetExceeded(RuntimeError):
    """A configured resource limit (cut width, node count, crossings) was hit."""


def _mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _add_into(acc: Poly, p: Poly) -> None:
    for e, c in p.items():
        v = acc.get(e, 0) + c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)


class Vertex:
    """A planar box with boundary ``labels`` expanded as weighted matchings.

    ``terms`` is a list of ``(pairs, weight)`` where ``pairs`` is a tuple of
    label pairs forming a perfect matching of ``labels``.
    """

    __slots__ = ("labels", "terms")

    def __init__(self, labels: Sequence[int], terms: Sequence[tuple[tuple[tuple[int, int], ...], Poly]]):
        self.labels = tuple(labels)
        self.terms = list(terms)

    @classmethod
    def crossing(cls, x: Sequence[int]) -> Vertex:
        a, b, c, d = x
        return cls(x, [(((a, b), (c, d)), {1: 1}), (((a, d), (b, c)), {-1: 1})])


def sweep_order(vertices: Sequence[Vertex]) -> list[int]:
    """Greedy absorption order keeping the cut small.

    At each step take the vertex sharing the most labels with the current
    cut, preferring vertices that add the fewest new open labels.
    """
    n = len(vertices)
    if n == 0:
        return []
    owners: dict[int, list[int]] = {}
    for i, v in enumerate(vertices):
        for lab in v.labels:
            owners.setdefault(lab, []).append(i)
    done = [False] * n
    open_count: dict[int, int] = {}
    order = []
    # start from the vertex with fewest distinct labels, then by index
    start = min(range(n), key=lambda i: (len(set(vertices[i].labels)), i))
    candidates = {start}
    while len(order) < n:
        if not candidates:
            candidates = {min(i for i in range(n) if not done[i])}
        best = None
        best_key = None
        for i in candidates:
            labs = vertices[i].labels
            shared = sum(1 for lab in labs if open_count.get(lab, 0) == 1)
            key = (-(2 * shared - len(labs)), -shared, i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        order.append(best)
        done[best] = True
        candidates.discard(best)
        for lab in vertices[best].labels:
            open_count[lab] = open_count.get(lab, 0) + 1
            for j in owners[lab]:
                if not done[j]:
                    candidates.add(j)
    return order


def cut_width(vertices: Sequence[Vertex], order: Sequence[int]) -> int:
    seen: dict[int, int] = {}
    width = 0
    open_labels = 0
    for i in order:
        for lab in vertices[i].labels:
            seen[lab] = seen.get(lab, 0) + 1
            open_labels += 1 if seen[lab] == 1 else -1
        width = max(width, open_labels)
    return width


def _absorb(state: dict[int, int], labels: Sequence[int], pairs) -> tuple[tuple[tuple[int, int], ...], int]:
    """Glue ``pairs`` onto the matching ``state``; return the new matching and closed-loop count."""
    edges = list(pairs)
    touched = set(labels)
    for lab in touched:
        partner = state.get(lab)
        if partner is not None and (partner not in touched or lab < partner):
            edges.append((lab, partner))
    inc: dict[int, list[int]] = {}
    for k, (u, v) in enumerate(edges):
        inc.setdefault(u, []).append(k)
        inc.setdefault(v, []).append(k)
    used = [False] * len(edges)
    new_pairs = []
    for node, ks in inc.items():
        if len(ks) != 1 or used[ks[0]]:
            continue
        k = ks[0]
        cur = node
        while True:
            used[k] = True
            u, v = edges[k]
            cur = v if u == cur else u
            ks2 = inc[cur]
            if len(ks2) == 1:
                break
            k = ks2[1] if ks2[0] == k else ks2[0]
        new_pairs.append((node, cur) if node < cur else (cur, node))
    loops = 0
    for k0 in range(len(edges)):
        if used[k0]:
            continue
        loops += 1
        k = k0
        cur = edges[k0][0]
        while not used[k]:
            used[k] = True
            u, v = edges[k]
            cur = v if u == cur else u
            ks2 = inc[cur]
            k = ks2[1] if ks2[0] == k else ks2[0]
    rest = [(a, b) for a, b in state.items() if a < b and a not in inc and b not in inc]
    return tuple(sorted(rest + new_pairs)), loops


def sweep_evaluate(vertices: Sequence[Vertex], max_width: int = DEFAULT_MAX_WIDTH,
                   order: Sequence[int] | None = None) -> Poly:
    """Sum over all planar resolutions of ``weight * delta^loops``.

    Every label must occur exactly twice over all vertices.
    """
    if order is None:
        order = sweep_order(vertices)
    width = cut_width(vertices, order)
    if width > max_width:
        raise BudgetExceeded(f"sweep cut width {width} exceeds limit {max_width}")
    delta_pow = [{0: 1}]
    states: dict[tuple, Poly] = {(): {0: 1}}
    for i in order:
        v = vertices[i]
        new_states: dict[tuple, Poly] = {}
        for key, coeff in states.items():
            state = {}
            for a, b in key:
                state[a] = b
                state[b] = a
            for pairs, weight in v.terms:
                nk, loops = _absorb(state, v.labels, pairs)
                while len(delta_pow) <= loops:
                    delta_pow.append(_mul(delta_pow[-1], DELTA))
                term = _mul(_mul(coeff, weight), delta_pow[loops]) if loops else _mul(coeff, weight)
                acc = new_states.get(nk)
                if acc is None:
                    new_states[nk] = term
                else:
                    _add_into(acc, term)
        states = {k: c for k, c in new_states.items() if c}
    total = states.get((), {})
    if any(k for k in states):
        raise RuntimeError("sweep finished with open arcs; labels are not paired")
    return total


def kauffman_bracket(d: PlanarDiagram, max_width: int = DEFAULT_MAX_WIDTH) -> LaurentPoly:
    """Kauffman bracket in ``A``, normalized so the crossingless unknot is 1."""
    delta = LaurentPoly(DELTA, "A")
    if not d.crossings:
        if d.loops == 0:
            raise ValueError("the empty diagram has no normalized bracket")
        return delta ** (d.loops - 1)
    total = sweep_evaluate([Vertex.crossing(x) for x in d.crossings], max_width)
    return LaurentPoly(total, "A").exact_div(delta) * delta ** d.loops


def bracket_state_sum(d: PlanarDiagram) -> LaurentPoly:
    """Brute-force 2^n state sum; independent oracle for :func:`kauffman_bracket`."""
    delta = LaurentPoly(DELTA, "A")
    n = len(d.crossings)
    if n == 0:
        return delta ** (d.loops - 1)
    labels = sorted({v for x in d.crossings for v in x})
    index = {lab: i for i, lab in enumerate(labels)}
    acc: dict[int, int] = {}
    counts: dict[tuple[int, int], int] = {}
    for state in range(1 << n):
        parent = list(range(len(labels)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        a_count = 0
        for k, (a, b, c, e) in enumerate(d.crossings):
            if state >> k & 1:
                pairs = ((a, e), (b, c))
            else:
                pairs = ((a, b), (c, e))
                a_count += 1
            for p, q in pairs:
                parent[find(index[p])] = find(index[q])
        loops = len({find(i) for i in range(len(labels))})
        key = (a_count - (n - a_count), loops)
        counts[key] = counts.get(key, 0) + 1
    total = LaurentPoly({}, "A")
    for (e, loops), mult in counts.items():
        total = total + LaurentPoly({e: mult}, "A") * delta ** (loops - 1 + d.loops)
    return total


def jones_from_bracket(bracket: LaurentPoly, w: int) -> LaurentPoly:
    """``V(t) = (-A^3)^(-w) <D>`` with ``t = A^-4``."""
    norm = LaurentPoly({-3 * w: (-1) ** (w % 2)}, "A")
    f = norm * bracket
    # links with an even number of components carry half-integer powers of t
    if any(e % 4 for e in f.terms):
        raise ValueError("Jones polynomial has half-integer exponents (even-component link)")
    return LaurentPoly({-e // 4: c for e, c in f.terms.items()}, "t")


def jones(d: PlanarDiagram, max_width: int = DEFAULT_MAX_WIDTH) -> LaurentPoly:
    """Jones polynomial ``V(t)``; the unknot evaluates to 1."""
    return jones_from_bracket(kauffman_bracket(d, max_width), writhe(d))
