from __future__ import annotations

import random

import pytest

from knotmut.diagram import (
    DiagramError,
    DTError,
    PDSyntaxError,
    PlanarDiagram,
    add_bigon,
    add_kink,
    braid_closure,
    dt_code,
    format_dt,
    format_pd,
    goeritz,
    mirror,
    parse_dt,
    parse_pd,
    realize_dt,
    signature,
    writhe,
)
from knotmut.skein import jones

LEFT_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"


def test_parse_pd_roundtrip():
    d = parse_pd(LEFT_TREFOIL)
    assert d.n_crossings == 3
    assert d.n_components == 1
    assert parse_pd(format_pd(d)) == d


def test_parse_pd_accepts_mathematica_brackets():
    d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
    assert d == parse_pd(LEFT_TREFOIL)


def test_left_trefoil_writhe():
    assert writhe(parse_pd(LEFT_TREFOIL)) == -3


def test_mirror_negates_writhe_and_is_involutive():
    d = parse_pd(LEFT_TREFOIL)
    m = mirror(d)
    assert writhe(m) == 3
    assert mirror(m) == d


@pytest.mark.parametrize("text", ["X(1,2,3)", "X(1,2,3,4", "Y(1,2,3,4)", "X(1,2,3,4) junk"])
def test_parse_pd_syntax_errors(text):
    with pytest.raises(DiagramError):
        parse_pd(text)


def test_syntax_error_reports_position():
    with pytest.raises(PDSyntaxError) as exc:
        parse_pd("X(1,2,3,4) X(3,4")
    assert exc.value.position > 0


def test_label_must_occur_twice():
    with pytest.raises(DiagramError):
        parse_pd("X(1,2,3,4) X(3,4,5,6)")


def test_nonplanar_rotation_rejected():
    # the same four arcs joined with a twisted rotation
    with pytest.raises(DiagramError):
        parse_pd("X(1,2,3,4) X(2,1,4,3) X(5,6,7,8) X(6,5,8,7) X(9,10,11,12)")


def test_unknot_diagram():
    u = PlanarDiagram.unknot()
    assert u.n_components == 1 and u.n_crossings == 0


def test_braid_closure_signs():
    d = braid_closure([1, 1, 1])
    assert d.n_components == 1
    assert writhe(d) == 3
    assert braid_closure([1, 1]).n_components == 2


# -- DT codes --------------------------------------------------------------------
def test_parse_dt_with_name():
    code = parse_dt("trefoil 4 6 2")
    assert code.name == "trefoil"
    assert code.pairs == (4, 6, 2)
    assert format_dt(code).split()[-3:] == ["4", "6", "2"]


@pytest.mark.parametrize("text", ["", "4 6 3", "4 4 2", "a b c"])
def test_parse_dt_errors(text):
    with pytest.raises(DTError):
        parse_dt(text)


def test_kink_code_rejected():
    with pytest.raises(DTError):
        realize_dt("2")


@pytest.mark.parametrize("code", ["4 6 2", "4 6 8 2", "6 8 10 2 4", "4 10 14 12 2 8 6", "4 8 -12 2 -14 -6 10"])
def test_dt_realization_roundtrip(code):
    d = realize_dt(code)
    assert d.n_components == 1
    assert d.n_crossings == len(code.split())
    again = realize_dt(dt_code(d))
    assert jones(again) == jones(d)


def test_dt_non_realizable():
    # the 3-crossing code with a non-planar pairing
    with pytest.raises(DTError):
        realize_dt("6 8 10 12 2 4")


# -- signature -------------------------------------------------------------------
@pytest.mark.parametrize(
    "d, expected",
    [
        (parse_pd(LEFT_TREFOIL), 2),
        (mirror(parse_pd(LEFT_TREFOIL)), -2),
        (realize_dt("4 6 8 2"), 0),  # figure-eight
        (braid_closure([1, 2, 1, 2, 1, 2, 1, 2]), -6),  # T(3,4)
        (braid_closure([1] * 5), -4),  # T(2,5)
    ],
)
def test_signature_values(d, expected):
    assert signature(d) == expected


def test_signature_independent_of_shading():
    for code in ("4 10 14 12 2 8 6", "4 8 -12 2 -14 -6 10", "6 8 10 2 4"):
        d = realize_dt(code)
        values = {goeritz(d, unshaded=c).signature for c in (0, 1)}
        assert len(values) == 1


def test_signature_mirror_negates():
    rng = random.Random(3)
    for _ in range(10):
        word = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(3, 8))]
        d = braid_closure(word, 3)
        if d.n_components != 1:
            continue
        assert signature(mirror(d)) == -signature(d)


# -- Reidemeister moves ----------------------------------------------------------------
@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("under_first", [True, False])
def test_kink_changes_writhe_by_sign(sign, under_first):
    d = parse_pd(LEFT_TREFOIL)
    k = add_kink(d, 1, sign, under_first)
    assert k.n_crossings == 4
    assert writhe(k) == writhe(d) + sign
    assert jones(k) == jones(d)


def test_bigon_adds_two_crossings_of_opposite_sign():
    d = parse_pd(LEFT_TREFOIL)
    f = d.faces[0]
    a, b = sorted({d.crossings[c][k] for c, k in f})[:2]
    e = add_bigon(d, a, b)
    assert e.n_crossings == 5
    assert writhe(e) == writhe(d)
    assert jones(e) == jones(d)


def test_bigon_needs_shared_face():
    d = realize_dt("4 10 14 12 2 8 6")
    labels = sorted({v for x in d.crossings for v in x})
    shared = {(a, b) for f in d.faces for a in {d.crossings[c][k] for c, k in f}
              for b in {d.crossings[c][k] for c, k in f}}
    apart = next((a, b) for a in labels for b in labels if a != b and (a, b) not in shared)
    with pytest.raises(DiagramError):
        add_bigon(d, *apart)
