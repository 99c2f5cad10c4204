"""Acceptance criteria 1 to 11.

Each test records one pass/fail line, printed in the "acceptance criteria"
section at the end of the pytest run.
"""

from __future__ import annotations

import random
import time
import warnings
from contextlib import contextmanager

import pytest
from conftest import ACCEPTANCE, FIXTURES, KH_STATS, PAIRS, cached_khovanov
from knot_helpers import crossing_changed
from test_fixtures import _k75, listed_kh

from knotmut.coloredjones import TLElement, colored_jones, jw_projector, loop_value
from knotmut.diagram import braid_closure, signature
from knotmut.khovanov import kh_diff
from knotmut.mutation import (
    MultiComponentClosure,
    cable,
    close,
    mutate,
    planar_closures,
    random_tangles,
    string_preserving_involution,
)
from knotmut.pipeline import classify, report
from knotmut.skein import (
    LaurentPoly,
    LaurentPoly2,
    alexander,
    bracket_state_sum,
    homfly,
    jones,
    kauffman_bracket,
    kauffman_poly,
)


@contextmanager
def criterion(key: str, title: str):
    """Record a PASS or FAIL line for one criterion, with its wall time."""
    t0 = time.perf_counter()
    detail: list[str] = []
    try:
        yield detail
    except pytest.skip.Exception as exc:
        ACCEPTANCE[key] = f"{key.lstrip('0'):>3}  NOT ATTEMPTED  {title}: {exc.msg}"
        raise
    except BaseException:
        ACCEPTANCE[key] = f"{key.lstrip('0'):>3}  FAIL  {title}"
        raise
    note = f" ({'; '.join(detail)})" if detail else ""
    ACCEPTANCE[key] = f"{key.lstrip('0'):>3}  PASS  {title}{note} [{time.perf_counter() - t0:.1f} s]"


@pytest.fixture(autouse=True)
def _quiet_closures():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MultiComponentClosure)
        yield


def jones_in_q(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(dict(p.substitute(2).items()), "q")


# -- polynomial fixtures -------------------------------------------------------------
def test_01_jones_fixtures(records, listings):
    with criterion("01", "Jones polynomials of the ten fixtures") as note:
        for name in FIXTURES:
            assert records[name].invariant("jones") == LaurentPoly.from_json(listings["knots"][name]["jones"]), name
        for a, b in PAIRS:
            assert records[a].invariant("jones") == records[b].invariant("jones")
        note.append(f"14n22185: {records['14n22185'].invariant('jones')}")


def test_02_alexander_fixtures(records, listings):
    with criterion("02", "Alexander polynomials of the ten fixtures") as note:
        for name in FIXTURES:
            want = LaurentPoly.from_json(listings["knots"][name]["alexander"])
            assert records[name].invariant("alexander") == want, name
        note.append(f"15n57436: {records['15n57436'].invariant('alexander')}")


def test_03_homfly_fixtures(records, listings):
    with criterion("03", "HOMFLY-PT tables of the ten fixtures, cell for cell") as note:
        cells = 0
        for name in FIXTURES:
            want = LaurentPoly2.from_json(listings["knots"][name]["homfly"])
            got = records[name].invariant("homfly")
            assert got.table() == want.table(), name
            cells += len(want.items())
        for a, b in PAIRS:
            assert records[a].invariant("homfly") == records[b].invariant("homfly")
        note.append(f"{cells} nonzero cells")


def test_04_kauffman_fixtures(records, listings):
    with criterion("04", "Kauffman tables of the ten fixtures, cell for cell") as note:
        cells = 0
        for name in FIXTURES:
            want = LaurentPoly2.from_json(listings["knots"][name]["kauffman"])
            got = records[name].invariant("kauffman")
            assert got.table() == want.table(), name
            cells += len(want.items())
        for a, b in PAIRS:
            assert records[a].invariant("kauffman") == records[b].invariant("kauffman")
        note.append(f"{cells} nonzero cells")


# -- Khovanov homology -------------------------------------------------------------------
def test_05_khovanov_separates_pairs(records, listings):
    with criterion("05", "integral Khovanov homology matches listings; every pair differs") as note:
        for name in FIXTURES:
            assert cached_khovanov(records[name]) == listed_kh(listings["knots"][name]), name
        g = cached_khovanov(records["14n22185"])
        assert g.groups[(0, -1)] == (2, (2, 2))
        for a, b in PAIRS:
            diffs = kh_diff(cached_khovanov(records[a]), cached_khovanov(records[b]))
            assert diffs, (a, b)
        h = cached_khovanov(records["14n22589"])
        assert g.rank(-5, -9) != h.rank(-5, -9)
        note.append("Z^2 + Z2^2 at (0,-1) for 14n22185")


def test_06_reduced_khovanov_separates_fourteen_crossing_pair(records):
    with criterion("06", "reduced Khovanov homology differs for 14n22185, 14n22589") as note:
        a, b = (cached_khovanov(records[n], reduced=True) for n in PAIRS[0])
        diffs = kh_diff(a, b)
        assert diffs
        note.append(f"{len(diffs)} bidegrees differ")


def test_07_colored_jones(records):
    with criterion("07", "J_2 = Jones on all fixtures and J_3 equal on 14n22185, 14n22589") as note:
        for name in FIXTURES:
            assert colored_jones(records[name].diagram, 2) == records[name].invariant("jones"), name
        j3 = [colored_jones(records[n].diagram, 3) for n in PAIRS[0]]
        assert j3[0] == j3[1]
        note.append(f"J_3 has {len(j3[0].items())} terms")


def test_08_euler_characteristic(records):
    with criterion("08", "graded Euler characteristic of Khovanov homology is the Jones polynomial"):
        q = LaurentPoly.var("q")
        for name in FIXTURES:
            want = (q + q ** -1) * jones_in_q(records[name].invariant("jones"))
            assert cached_khovanov(records[name]).euler_characteristic() == want, name


# -- property suites ------------------------------------------------------------------------
def _random_diagrams(seed: int = 1):
    """Diagrams of at most 12 crossings: tangle sums and braid closures."""
    ts = random_tangles(300, 6, seed=seed)
    for t, outside in zip(ts[::2], ts[1::2]):
        yield close(t, outside)
    rng = random.Random(seed)
    for _ in range(100):
        k = rng.randint(2, 5)
        word = [rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(rng.randint(1, 12))]
        yield braid_closure(word, k)


def test_09a_bracket_sweep_matches_state_sum():
    with criterion("09a", "transfer-matrix bracket equals the state sum") as note:
        count = 0
        for d in _random_diagrams():
            assert d.n_crossings <= 12
            assert kauffman_bracket(d) == bracket_state_sum(d)
            count += 1
        assert count >= 200
        note.append(f"{count} diagrams")


def _invariants(d):
    return jones(d), homfly(d), kauffman_poly(d), alexander(d), signature(d)


def test_09b_conway_mutation_invariance():
    with criterion("09b", "Conway mutation preserves Jones, HOMFLY-PT, Kauffman, Alexander, signature") as note:
        ts = random_tangles(300, 6, seed=21)
        triples = changed = controls = 0
        for t, outside in zip(ts[::2], ts[1::2]):
            d = close(t, outside)
            if d.n_components != 1:
                continue
            base = _invariants(d)
            for s in "xyz":
                assert _invariants(close(mutate(t, s), outside)) == base
                triples += 1
            # control: a crossing change inside the tangle is not a mutation
            controls += 1
            changed += homfly(close(crossing_changed(t), outside)) != base[1]
        assert triples >= 100
        assert changed > 0
        note.append(f"{triples} triples; control changed HOMFLY-PT in {changed}/{controls}")


def test_09c_cabled_mutation_invariance():
    with criterion("09c", "(1,2)-cabled mutation preserves HOMFLY-PT and Kauffman") as note:
        tangles = closures = 0
        for t in random_tangles(25, 4, seed=11):
            s = string_preserving_involution(t)
            a, b = cable(t, (1, 2)), cable(mutate(t, s), (1, 2))
            seen = 0
            for cl in planar_closures(a):
                d = close(a, cl)
                if d.n_components != 1:
                    continue
                e = close(b, cl)
                assert homfly(e) == homfly(d)
                assert kauffman_poly(e) == kauffman_poly(d)
                seen += 1
            tangles += seen > 0
            closures += seen
        assert tangles >= 20
        note.append(f"{tangles} tangles, {closures} knot closures")


def test_09d_jones_wenzl():
    with criterion("09d", "Jones-Wenzl idempotence, annihilation and trace for n <= 6"):
        for n in range(1, 7):
            f = jw_projector(n, check=False).element
            assert f * f == f
            for i in range(1, n):
                e = TLElement.generator(n, i)
                assert not (e * f).terms and not (f * e).terms
            assert f.trace() == loop_value(n)


def test_09e_d_squared_on_every_complex():
    with criterion("09e", "d^2 = 0 on every Khovanov complex built") as note:
        if not KH_STATS.get("complexes"):
            pytest.skip("no Khovanov complexes were built in this run")
        checked = KH_STATS.get("d2_exhaustive", 0) + KH_STATS.get("d2_randomized", 0)
        assert checked == KH_STATS["complexes"]
        note.append(f"{KH_STATS['complexes']} complexes, {KH_STATS.get('d2_exhaustive', 0)} checked exhaustively")


# -- pipeline ----------------------------------------------------------------------------------
def test_10_pipeline_classes(records):
    with criterion("10", "classification gives five classes of size two, all Khovanov-different") as note:
        recs = list(records.values())
        for r in recs:
            cached_khovanov(r)
        classes = classify(recs)
        text = report(classes, records=recs).splitlines()
        assert text[0] == "2: 5"
        assert len(text) == 6 and all(line.endswith("Kh differs") for line in text[1:])
        note.append(text[0])


# -- the 75-crossing pair ---------------------------------------------------------------------
def test_11_k75_stretch(listings):
    with criterion("11", "75-crossing HOMFLY-PT tables (stretch, not gating)"):
        p, q = _k75(listings, "K75"), _k75(listings, "K75tau")
        l = LaurentPoly.var("l")
        assert p.specialize(l, l + l ** -1) == q.specialize(l, l + l ** -1) == 1
        assert (p.coefficient(-4, 4), q.coefficient(-4, 4)) == (-953, -964)
        pytest.skip("the 75-crossing diagram is not transcribed; the tables were checked for "
                    "consistency only (unit identity, -953 vs -964)")

