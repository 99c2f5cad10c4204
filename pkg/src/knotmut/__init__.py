"""Knot invariants for studying Conway, cabled and genus-2 mutation."""

__version__ = "0.1.0"

from .coloredjones import colored_jones, jw_projector  # noqa: E402
from .diagram import PlanarDiagram, mirror, parse_pd, realize_dt, signature, writhe  # noqa: E402
from .khovanov import format_kh, kh_diff, khovanov  # noqa: E402
from .mutation import cable, cabled_mutate, close, extract_tangle, mutate, parse_tangle  # noqa: E402
from .pipeline import classify, ingest, report  # noqa: E402
from .skein import alexander, homfly, jones, kauffman_bracket, kauffman_poly  # noqa: E402

__all__ = [
    "PlanarDiagram",
    "alexander",
    "cable",
    "cabled_mutate",
    "classify",
    "close",
    "colored_jones",
    "extract_tangle",
    "format_kh",
    "homfly",
    "ingest",
    "jones",
    "jw_projector",
    "kauffman_bracket",
    "kauffman_poly",
    "kh_diff",
    "khovanov",
    "mirror",
    "mutate",
    "parse_pd",
    "parse_tangle",
    "realize_dt",
    "report",
    "signature",
    "writhe",
]
