"""Bundled knots against their transcribed listings."""

from __future__ import annotations

from importlib.resources import files

import pytest
from conftest import FIXTURES, PAIRS

from knotmut.khovanov import BigradedGroups, parse_kh
from knotmut.skein import LaurentPoly, LaurentPoly2, homfly_to_alexander, homfly_to_jones


def listed_kh(entry) -> BigradedGroups:
    ranks = {(i, j): r for i, j, r in entry["kh_ranks"]}
    torsion = {(i, j): [2] * k for i, j, k in entry["kh_torsion"]}
    return BigradedGroups.from_tables(ranks, torsion)


@pytest.mark.parametrize("name", FIXTURES)
def test_jones(records, listings, name):
    assert records[name].invariant("jones") == LaurentPoly.from_json(listings["knots"][name]["jones"])


@pytest.mark.parametrize("name", FIXTURES)
def test_alexander(records, listings, name):
    assert records[name].invariant("alexander") == LaurentPoly.from_json(listings["knots"][name]["alexander"])


@pytest.mark.parametrize("name", FIXTURES)
def test_listed_homfly_specializes(listings, name):
    entry = listings["knots"][name]
    p = LaurentPoly2.from_json(entry["homfly"])
    assert homfly_to_jones(p) == LaurentPoly.from_json(entry["jones"])
    assert homfly_to_alexander(p) == LaurentPoly.from_json(entry["alexander"])


@pytest.mark.parametrize("name", FIXTURES)
def test_volume_matches_listing(records, listings, name):
    assert str(records[name].volume) == str(listings["knots"][name]["volume"])


@pytest.mark.parametrize("name", FIXTURES)
def test_khovanov_file_matches_listing(listings, name):
    ranks, torsion = (files("knotmut.data") / "khovanov" / f"{name}.kh").read_text().splitlines()[:2]
    assert parse_kh(ranks, torsion) == listed_kh(listings["knots"][name])


def test_listed_torsion_is_all_of_order_two(listings):
    for name in FIXTURES:
        g = listed_kh(listings["knots"][name])
        assert set(t for ts in g.torsion_table.values() for t in ts) == {2}


def test_fourteen_crossing_listing_counts(listings):
    assert len(listings["knots"]["14n22589"]["kh_ranks"]) == 23
    g = listed_kh(listings["knots"]["14n22185"])
    assert g.groups[(0, -1)] == (2, (2, 2))
    assert g.rank(-7, -13) == 1


@pytest.mark.parametrize("a, b", PAIRS)
def test_pairs_share_listed_polynomials(listings, a, b):
    for kind in ("jones", "alexander", "homfly", "kauffman"):
        assert listings["knots"][a][kind] == listings["knots"][b][kind]


def test_published_signatures(records, listings):
    for a, b, sig in listings["pairs"]:
        assert records[a].invariant("signature") == records[b].invariant("signature") == sig


# -- the large pair whose diagram is not bundled -----------------------------------------
def _k75(listings, which):
    return LaurentPoly2({(a, b): c for a, b, c in listings["k75_homfly"][which]})


@pytest.mark.parametrize("which", ["K75", "K75tau"])
def test_k75_tables_are_consistent(listings, which):
    p = _k75(listings, which)
    l = LaurentPoly.var("l")
    # the tables use l P+ + l^-1 P- + m P0 = 0, where P(l, l + l^-1) = 1 for every knot
    assert p.specialize(l, l + l ** -1) == 1
    # and l = 1 gives a Conway polynomial with constant term 1
    assert p.specialize(LaurentPoly.const(1, "l"), l).coefficient(0) == 1


def test_k75_pair_differs_where_published(listings):
    p, q = _k75(listings, "K75"), _k75(listings, "K75tau")
    assert p.coefficient(-4, 2) == q.coefficient(-4, 2) == 56
    assert (p.coefficient(-4, 4), q.coefficient(-4, 4)) == (-953, -964)
