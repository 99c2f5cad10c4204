from __future__ import annotations

import json
import time
from importlib.resources import files

import pytest

from knotmut.khovanov.homology import khovanov
from knotmut.pipeline.records import ENGINE_VERSION, ComputedInvariant, fixture_records

PAIRS = [
    ("14n22185", "14n22589"),
    ("15n57436", "15n57606"),
    ("15n133697", "15n135711"),
    ("15n115375", "15n51748"),
    ("15n148673", "15n151500M"),
]
FIXTURES = [k for pair in PAIRS for k in pair]

# khovanov complexes built during the session, and how d^2 = 0 was checked
KH_STATS: dict = {}
ACCEPTANCE: dict[str, str] = {}


@pytest.fixture(scope="session")
def listings() -> dict:
    return json.loads((files("knotmut.data") / "listings.json").read_text())


@pytest.fixture(scope="session")
def records() -> dict:
    """Fixture knot records shared by every test, so invariants are computed once."""
    return {r.name: r for r in fixture_records()}


def cached_khovanov(rec, reduced: bool = False):
    kind = "reduced_khovanov" if reduced else "khovanov"
    if kind not in rec.invariants:
        t0 = time.perf_counter()
        g = khovanov(rec.diagram, reduced=reduced, stats=KH_STATS)
        rec.invariants[kind] = ComputedInvariant(g, ENGINE_VERSION, time.perf_counter() - t0)
    return rec.invariants[kind].value


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
