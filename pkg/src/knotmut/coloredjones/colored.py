"""Colored Jones polynomials from cabling with a Jones-Wenzl projector.

``J_N(K)`` is computed on the blackboard ``(N-1)``-parallel of a diagram
with one ``f_{N-1}`` inserted on the arc of smallest label.  The cable is
evaluated by the same Temperley-Lieb sweep as the bracket; the projector
enters the sweep as one more planar box after clearing its denominators.
A positive kink on an ``f_n``-coloured strand costs ``(-1)^n A^(n^2+2n)``,
which fixes the writhe correction, and dividing by the coloured unknot
``(-1)^n [n+1]`` normalizes ``J_N(unknot) = 1``.  With ``t = A^-4``,
``J_2`` is the Jones polynomial.
"""

from __future__ import annotations

from ..diagram.pd import DiagramError, PlanarDiagram, writhe
from ..mutation.tangle import cable_crossings
from ..skein.bracket import BudgetExceeded, Vertex, sweep_evaluate, sweep_order
from ..skein.laurent import LaurentPoly
from .projector import jw_projector, loop_value
from .tl import QFrac, quantum_int

__all__ = ["colored_jones", "colored_bracket", "DEFAULT_MAX_COLOR", "DEFAULT_CABLE_WIDTH"]

DEFAULT_MAX_COLOR = 5
DEFAULT_CABLE_WIDTH = 20


def colored_bracket(d: PlanarDiagram, n: int, max_width: int = DEFAULT_CABLE_WIDTH) -> LaurentPoly:
    """Unnormalized bracket of the blackboard ``n``-cable of ``d`` with ``f_n`` inserted."""
    if d.n_components != 1:
        raise DiagramError("colored Jones polynomials are implemented for knots only")
    f = jw_projector(n).element
    if not d.crossings:
        return loop_value(n).num
    labels = sorted({v for x in d.crossings for v in x})
    nxt = [max(labels) + 1]

    def fresh():
        nxt[0] += 1
        return nxt[0] - 1

    copies = {lab: [fresh() for _ in range(n)] for lab in labels}
    cut = labels[0]
    head = [fresh() for _ in range(n)]

    def head_label(lab, i):
        return head[i] if lab == cut else copies[lab][i]

    oriented = [(x, s > 0) for x, s in zip(d.crossings, d.signs)]
    vertices = []
    blocks = []
    for x in oriented:
        quads = cable_crossings([x], copies.__getitem__, fresh, head_label)
        blocks.append(list(range(len(vertices), len(vertices) + len(quads))))
        vertices.extend(Vertex.crossing(q) for q in quads)
    # projector box: bottom points are the tail copies, top points the head copies
    den = f.common_denominator()
    dpoly = LaurentPoly.const(1, "A")
    for k, e in den.items():
        dpoly = dpoly * quantum_int(k) ** e
    point = copies[cut] + head
    terms = []
    for m, c in f.terms.items():
        scaled = c * QFrac(dpoly)
        if not scaled.is_polynomial():
            raise ArithmeticError("projector denominators did not clear")
        pairs = tuple((point[a], point[b]) for a, b in m)
        terms.append((pairs, dict(scaled.num.terms)))
    box = len(vertices)
    vertices.append(Vertex(point, terms))
    base = sweep_order([Vertex.crossing(x) for x in d.crossings])
    order = []
    placed = False
    for ci in base:
        order.extend(blocks[ci])
        if not placed and cut in d.crossings[ci]:
            order.append(box)
            placed = True
    total = sweep_evaluate(vertices, max_width, order)
    return LaurentPoly(total, "A").exact_div(dpoly)


def colored_jones(d: PlanarDiagram, N: int, max_color: int = DEFAULT_MAX_COLOR,
                  max_width: int = DEFAULT_CABLE_WIDTH) -> LaurentPoly:
    """``J_N(d)`` in ``t = A^-4``, normalized so the unknot gives 1 and ``J_2`` is Jones."""
    if N < 2:
        raise ValueError("colors start at N = 2")
    if N > max_color:
        raise BudgetExceeded(f"color {N} exceeds the limit {max_color}")
    n = N - 1
    br = colored_bracket(d, n, max_width)
    w = writhe(d)
    frame = LaurentPoly({-n * (n + 2) * w: (-1) ** (n * w % 2)}, "A")
    val = (frame * br).exact_div(loop_value(n).num)
    if any(e % 4 for e in val.terms):
        raise ArithmeticError("colored Jones polynomial has exponents outside A^4 Z")
    return LaurentPoly({-e // 4: c for e, c in val.terms.items()}, "t")
