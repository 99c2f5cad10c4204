from __future__ import annotations

import json
from decimal import Decimal

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotmut.diagram import PlanarDiagram
from knotmut.pipeline import classify, ingest, report
from knotmut.pipeline.cli import main
from knotmut.pipeline.records import ComputedInvariant, IngestError, KnotRecord, MissingInvariantError, load_knot

TREFOIL_AND_EIGHT = "trefoil 4 6 2\nfig8 4 6 8 2\n"


def synthetic(name: str, key: int, volume: Decimal) -> KnotRecord:
    rec = KnotRecord(name, PlanarDiagram.unknot(), volume)
    for kind, value in (("homfly", key), ("kauffman", key % 2), ("signature", 0)):
        rec.invariants[kind] = ComputedInvariant(value, "test", 0.0)
    return rec


@pytest.fixture
def small_files(tmp_path):
    (tmp_path / "knots.dt").write_text(TREFOIL_AND_EIGHT)
    (tmp_path / "volumes.txt").write_text("trefoil 0 1\nfig8 2.029883212 10\n")
    return tmp_path


# -- ingestion -------------------------------------------------------------------
def test_fixture_ingest(records):
    assert len(records) == 10
    assert records["14n22185"].volume == Decimal("8.878159662")
    assert records["15n57436"].volume_digits == 11
    assert all(r.diagram.n_components == 1 for r in records.values())


def test_ingest_directory(small_files):
    recs = {r.name: r for r in ingest([small_files])}
    assert set(recs) == {"trefoil", "fig8"}
    assert recs["fig8"].volume == Decimal("2.029883212")


@pytest.mark.parametrize("files, message", [
    ({"a.dt": "k 4 6 2\nk 4 6 8 2\n"}, "duplicate knot name k"),
    ({"a.dt": "k 4 6 2\n", "volumes.txt": "other 1.0\n"}, "unknown knot other"),
    ({"a.dt": "k 4 6 2\n", "volumes.txt": "k 1.0\nk 2.0\n"}, "second volume for k"),
    ({"a.dt": "k 4 6 2\n", "volumes.txt": "k abc\n"}, "malformed volume 'abc' for k"),
    ({"a.dt": "k 4 6 2\nbad 4 4 2\n"}, "a.dt:2"),
    ({"a.txt": "k 4 6 2\n"}, "unknown file type"),
])
def test_ingest_errors(tmp_path, files, message):
    for name, text in files.items():
        (tmp_path / name).write_text(text)
    with pytest.raises(IngestError, match=message):
        ingest([tmp_path / n for n in files])


def test_ingest_missing_file(tmp_path):
    with pytest.raises(IngestError, match="no such file"):
        ingest([tmp_path / "nothing.pd"])


def test_load_knot_forms(tmp_path):
    (tmp_path / "k.pd").write_text("# lefty\nX(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n")
    assert load_knot(str(tmp_path / "k.pd"))[0] == "lefty"
    assert load_knot("DT 4 6 2")[1].n_crossings == 3
    assert load_knot("4 6 8 2")[1].n_crossings == 4
    assert load_knot("14n22185")[1].n_crossings == 14
    with pytest.raises(IngestError):
        load_knot("not a knot")


def test_mirror_record_uses_transforms(records):
    rec = records["15n148673"]
    m = rec.mirrored()
    assert m.name == "mirror(15n148673)"
    assert m.invariant("signature") == -rec.invariant("signature") == 2
    assert m.invariant("jones") == rec.invariant("jones").substitute(-1)


def test_manifest_records_engine_version():
    rec = KnotRecord("t", load_knot("DT 4 6 2")[1])
    rec.invariant("jones")
    assert set(rec.manifest()) == {"jones"}
    assert rec.manifest()["jones"]["engine_version"]


def test_unknown_invariant():
    with pytest.raises(KeyError):
        KnotRecord("t", PlanarDiagram.unknot()).invariant("volume")


# -- classification ------------------------------------------------------------------
def test_fixture_classes(records):
    classes = classify(list(records.values()))
    assert [c.size for c in classes] == [2] * 5
    pairs = {frozenset(c.members) for c in classes}
    assert frozenset({"14n22185", "14n22589"}) in pairs
    assert report(classes).splitlines()[0] == "2: 5"


def test_fixture_classes_with_mirrors(records):
    classes = classify(list(records.values()), mirrors=True)
    assert [c.size for c in classes] == [2] * 10
    assert report(classes).splitlines()[0] == "2: 10"


def test_zero_tolerance_keeps_equal_volumes(records):
    assert len(classify(list(records.values()), 0)) == 5


def test_singleton_and_tolerance():
    recs = [synthetic("a", 1, Decimal("1.0")), synthetic("b", 1, Decimal("1.5")), synthetic("c", 2, Decimal("1.0"))]
    assert [c.size for c in classify(recs, Decimal("0.1"))] == [1, 1, 1]
    assert [c.members for c in classify(recs, Decimal("0.5"))] == [("a", "b"), ("c",)]


def test_tolerance_chains_consecutive_gaps():
    recs = [synthetic(n, 1, Decimal(v)) for n, v in (("a", "1.0"), ("b", "1.4"), ("c", "1.8"))]
    assert [c.members for c in classify(recs, "0.4")] == [("a", "b", "c")]


def test_missing_volume_is_reported():
    rec = synthetic("a", 1, Decimal(1))
    rec.volume = None
    with pytest.raises(MissingInvariantError, match="a"):
        classify([rec])


def test_negative_tolerance_rejected():
    with pytest.raises(ValueError):
        classify([], -1)


def test_empty_report():
    assert report([]) == ""
    assert json.loads(report([], "json")) == {"histogram": {}, "classes": []}


names = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 30)), min_size=1, max_size=12)


@settings(max_examples=200, deadline=None)
@given(names, st.integers(0, 6), st.randoms(use_true_random=False))
def test_classification_is_an_order_independent_partition(items, tol, rng):
    recs = [synthetic(f"k{i}", key, Decimal(v) / 10) for i, (key, v) in enumerate(items)]
    tol = Decimal(tol) / 10
    classes = classify(recs, tol)
    shuffled = list(recs)
    rng.shuffle(shuffled)
    assert classify(shuffled, tol) == classes
    members = [m for c in classes for m in c.members]
    assert sorted(members) == sorted(r.name for r in recs)
    by_name = {r.name: r for r in recs}
    for c in classes:
        assert len({by_name[m].invariant("homfly") for m in c.members}) == 1
        vols = sorted(by_name[m].volume for m in c.members)
        assert all(b - a <= tol for a, b in zip(vols, vols[1:]))
    # classes sharing polynomials are separated by more than the tolerance
    for c1 in classes:
        for c2 in classes:
            if c1 is not c2 and c1.homfly == c2.homfly:
                gaps = [abs(by_name[a].volume - by_name[b].volume) for a in c1.members for b in c2.members]
                assert min(gaps) > tol


# -- command line -----------------------------------------------------------------------
def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_parse(capsys):
    code, out, _ = run(capsys, "parse", "DT 4 6 2")
    assert code == 0 and "crossings: 3" in out


def test_cli_parse_json(capsys):
    code, out, _ = run(capsys, "--json", "parse", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    assert code == 0 and json.loads(out)["writhe"] == -3
    code, out, _ = run(capsys, "parse", "DT 4 6 2", "--json")
    assert json.loads(out)["crossings"] == 3


def test_cli_invariants(capsys):
    code, out, _ = run(capsys, "--json", "invariants", "DT 4 6 8 2", "--jones", "--homfly", "--signature", "--kh")
    data = json.loads(out)
    assert code == 0
    assert data["signature"] == 0
    assert data["jones"]["text"] == "t^-2 - t^-1 + 1 - t + t^2"
    assert data["khovanov"]["ranks"]


def test_cli_colored_jones(capsys):
    code, out, _ = run(capsys, "invariants", "DT 4 6 8 2", "--colored-jones", "3")
    assert code == 0 and out.startswith("name: knot") and "J_3:" in out


def test_cli_tangle_commands(capsys):
    t = "B NW=2 NE=1 SW=5 SE=6;X(1,2,3,4) X(4,3,5,6)"
    assert run(capsys, "parse", "--tangle", t)[0] == 0
    code, out, _ = run(capsys, "mutate", t, "-s", "y", "--closure", "numerator")
    assert code == 0 and "closure components: 1" in out
    code, out, _ = run(capsys, "--json", "cable", t, "--n", "2", "--m", "3")
    assert code == 0 and json.loads(out)["crossings"] == 12
    code, out, _ = run(capsys, "close", t, "--closure", "NW0-SW0,NE0-SE0")
    assert code == 0 and "closure:" in out
    code, out, _ = run(capsys, "close", t, "--closure", "denominator")
    assert code == 0 and "warning: closure has 2 components" in out


def test_cli_classify(capsys, small_files):
    code, out, _ = run(capsys, "classify", str(small_files / "knots.dt"), str(small_files / "volumes.txt"))
    assert code == 0 and out.splitlines() == ["1: 2"]
    code, out, _ = run(capsys, "classify", str(small_files), "--mirrors", "--kh")
    lines = out.splitlines()
    assert lines[:2] == ["1: 2", "2: 1"]
    assert lines[2].startswith("{fig8, mirror(fig8)}") and lines[2].endswith("Kh equal")
    code, out, _ = run(capsys, "--json", "classify", str(small_files))
    assert json.loads(out)["histogram"] == {"1": 2}


def test_cli_kh_diff(capsys):
    code, out, _ = run(capsys, "kh-diff", "DT 4 6 8 2", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    assert code == 0 and "bidegrees differ" in out
    code, out, _ = run(capsys, "--json", "kh-diff", "DT 4 6 8 2", "DT 4 6 8 2", "--reduced")
    assert json.loads(out)["equal"] is True


@pytest.mark.parametrize("argv, expected", [
    (["frobnicate"], 1),
    ([], 1),
    (["classify", "--volume-tol", "abc"], 1),
    (["close", "B NW=1 NE=1 SW=2 SE=2", "--closure", "NWx-SW0"], 1),
    (["close", "B NW=1 NE=1 SW=2 SE=2", "--closure", "fig4z"], 2),
    (["parse", "X(1,2,3"], 2),
    (["parse", "DT 4 4 2"], 2),
    (["invariants", "no-such-knot"], 2),
    (["mutate", "B NW=1 NE=2 SW=3", "-s", "x"], 2),
    (["invariants", "DT 4 6 2", "--colored-jones", "7"], 3),
])
def test_cli_exit_codes(capsys, argv, expected):
    code, _, err = run(capsys, *argv)
    assert code == expected
    assert err


def test_cli_budget_inside_classification(capsys, tmp_path, monkeypatch):
    import knotmut.pipeline.records as records_mod
    from knotmut.skein import BudgetExceeded

    def refuse(d):
        raise BudgetExceeded("node limit")

    monkeypatch.setitem(records_mod.INVARIANTS, "homfly", refuse)
    (tmp_path / "k.dt").write_text("k 4 6 2\n")
    (tmp_path / "volumes.txt").write_text("k 1.0\n")
    code, _, err = run(capsys, "classify", str(tmp_path))
    assert code == 3 and "budget" in err


def test_module_entry_point():
    import subprocess
    import sys

    out = subprocess.run([sys.executable, "-m", "knotmut", "parse", "DT 4 6 2"], capture_output=True, text=True)
    assert out.returncode == 0 and "crossings: 3" in out.stdout
