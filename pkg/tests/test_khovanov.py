from __future__ import annotations

import pytest

from knotmut.diagram import DiagramError, PlanarDiagram, add_kink, braid_closure, mirror, parse_pd, realize_dt
from knotmut.khovanov import BigradedGroups, Cube, format_kh, kh_diff, khovanov, parse_kh
from knotmut.khovanov.homology import check_d_squared, rank_mod_p, smith_invariants
from knotmut.skein import BudgetExceeded, LaurentPoly, jones

LEFT_TREFOIL = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
KNOTS = [LEFT_TREFOIL, mirror(LEFT_TREFOIL), realize_dt("4 6 8 2"), realize_dt("6 8 10 2 4"),
         realize_dt("4 10 14 12 2 8 6"), realize_dt("4 8 -12 2 -14 -6 10")]


def jones_in_q(d) -> LaurentPoly:
    return LaurentPoly(dict(jones(d).substitute(2).items()), "q")


def test_unknot():
    g = khovanov(PlanarDiagram.unknot())
    assert g.ranks == {(0, -1): 1, (0, 1): 1} and not g.torsion_table
    assert format_kh(g) == ("1_{-1}^{0} 1_{1}^{0}", "")
    assert khovanov(PlanarDiagram.unknot(), reduced=True).ranks == {(0, 0): 1}


def test_left_trefoil():
    g = khovanov(LEFT_TREFOIL)
    assert g.ranks == {(0, -1): 1, (0, -3): 1, (-2, -5): 1, (-3, -9): 1}
    assert g.torsion_table == {(-2, -7): (2,)}


def test_right_trefoil():
    g = khovanov(mirror(LEFT_TREFOIL))
    assert g.ranks == {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}
    assert g.torsion_table == {(3, 7): (2,)}


@pytest.mark.parametrize("d", KNOTS)
def test_euler_characteristic_is_jones(d):
    q = LaurentPoly.var("q")
    assert khovanov(d).euler_characteristic() == (q + q ** -1) * jones_in_q(d)
    assert khovanov(d, reduced=True).euler_characteristic() == jones_in_q(d)


@pytest.mark.parametrize("d", KNOTS[2:])
def test_mirror_duality(d):
    g, m = khovanov(d), khovanov(mirror(d))
    assert m.ranks == g.mirror_ranks()
    # torsion moves from (i, j) to (1 - i, -j)
    assert m.torsion_table == {(1 - i, -j): t for (i, j), t in g.torsion_table.items()}


def test_kink_invariance():
    d = KNOTS[4]
    assert khovanov(add_kink(d, 3, -1)) == khovanov(d)
    assert khovanov(add_kink(d, 5, 1, under_first=False), reduced=True) == khovanov(d, reduced=True)


def test_rational_cross_check():
    for d in KNOTS[3:]:
        khovanov(d, cross_check=True)


def test_format_parse_roundtrip():
    g = khovanov(KNOTS[4])
    assert parse_kh(*format_kh(g)) == g
    assert BigradedGroups.from_json(g.to_json()) == g


def test_parse_underlined_grading():
    g = parse_kh(r"1_{\underline{13}}^{\underline{7}} 2_{1}^{0}", r"2_{\underline{1}}^{0}")
    assert g.rank(-7, -13) == 1 and g.rank(0, 1) == 2
    assert g.torsion(0, -1) == (2, 2)


def test_parse_rejects_junk():
    with pytest.raises(ValueError):
        parse_kh("1_{1}^{0} oops")


def test_odd_torsion_order_roundtrip():
    g = BigradedGroups({(1, 3): (0, (3, 2))})
    assert format_kh(g) == ("", "1_{3}^{1} 1_{3}^{1}[3]")
    assert parse_kh(*format_kh(g)) == g


def test_kh_diff():
    g, h = khovanov(LEFT_TREFOIL), khovanov(mirror(LEFT_TREFOIL))
    assert kh_diff(g, g) == []
    diffs = kh_diff(g, h)
    assert {(x.i, x.j) for x in diffs} == set(g.groups) | set(h.groups)


def test_smith_invariants():
    assert smith_invariants([[2, 4], [6, 8]]) == [2, 4]
    assert smith_invariants([[0, 0], [0, 0]]) == []
    assert smith_invariants([[1, 1], [1, -1]]) == [1, 2]


def test_d_squared_detects_a_bad_differential():
    cube = Cube(LEFT_TREFOIL)
    j = max(cube.quantum_gradings(), key=lambda q: cube.complex(q).size)
    cx = cube.complex(j)
    check_d_squared(cx)
    # find a composable pair x -> y -> z and double one entry
    for x, row in enumerate(cx.diff):
        for y in row:
            if cx.diff[y]:
                row[y] *= 2
                with pytest.raises(ArithmeticError):
                    check_d_squared(cx)
                return
    pytest.skip("no composable pair in this grading")


def test_rank_mod_p_matches_integral_ranks():
    cube = Cube(KNOTS[4])
    for j in cube.quantum_gradings():
        cx = cube.complex(j)
        assert rank_mod_p(cx) == {i: r for (i, jj), r in khovanov(KNOTS[4]).ranks.items() if jj == j}


def test_links_rejected():
    with pytest.raises(DiagramError, match="knots only"):
        khovanov(braid_closure([1, 1]))


def test_crossing_budget():
    with pytest.raises(BudgetExceeded):
        khovanov(KNOTS[4], max_crossings=5)
