"""Planar diagrams: PD and DT codes, Reidemeister moves and the signature."""

from __future__ import annotations

from .dt import DTCode, DTError, dt_code, format_dt, parse_dt, realize_dt
from .goeritz import GoeritzData, goeritz, signature
from .moves import add_bigon, add_kink
from .pd import (
    Crossing,
    DiagramError,
    PDSyntaxError,
    PlanarDiagram,
    braid_closure,
    format_pd,
    mirror,
    orient,
    parse_pd,
    writhe,
)

__all__ = [
    "Crossing",
    "DTCode",
    "DTError",
    "DiagramError",
    "GoeritzData",
    "PDSyntaxError",
    "PlanarDiagram",
    "add_bigon",
    "add_kink",
    "braid_closure",
    "dt_code",
    "format_dt",
    "format_pd",
    "goeritz",
    "mirror",
    "orient",
    "parse_dt",
    "parse_pd",
    "realize_dt",
    "signature",
    "writhe",
]
