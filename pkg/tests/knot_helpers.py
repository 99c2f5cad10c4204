"""Helpers shared by the test modules."""

from __future__ import annotations

from importlib.resources import files

from knotmut.diagram import PlanarDiagram, dt_code, parse_pd
from knotmut.mutation import Tangle


def canonical_dt(d: PlanarDiagram) -> tuple[int, ...]:
    """Smallest DT code over every starting arc and both directions of a knot diagram."""
    best = None
    reverse = PlanarDiagram(tuple((c, x, a, b) for a, b, c, x in d.crossings))
    for e in (d, reverse):
        e = e.standard_labels()
        n2 = 2 * e.n_crossings
        for k in range(n2):
            code = tuple(dt_code(e.relabel({v: (v - 1 + k) % n2 + 1 for v in range(1, n2 + 1)})).pairs)
            if best is None or code < best:
                best = code
    return best


def extra_diagram(name: str) -> PlanarDiagram:
    return parse_pd((files("knotmut.data") / "extra" / f"{name}.pd").read_text())


def crossing_changed(t: Tangle) -> Tangle:
    """The tangle with every crossing switched (a control, not a mutation)."""
    xs = tuple((b, c, d, a) for a, b, c, d in t.crossings)
    return Tangle(xs, t.boundary, t.strings, t.framing)
