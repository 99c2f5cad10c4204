"""Ingestion, almost-mutant classification, reports and the command line."""

from __future__ import annotations

from .classify import DEFAULT_VOLUME_TOL, AlmostMutantClass, classify, report
from .records import (ENGINE_VERSION, ComputedInvariant, IngestError, KnotRecord, MissingInvariantError,
                      fixture_names, fixture_records, ingest, load_knot)

__all__ = [
    "AlmostMutantClass",
    "ComputedInvariant",
    "DEFAULT_VOLUME_TOL",
    "ENGINE_VERSION",
    "IngestError",
    "KnotRecord",
    "MissingInvariantError",
    "classify",
    "fixture_names",
    "fixture_records",
    "ingest",
    "load_knot",
    "report",
]
