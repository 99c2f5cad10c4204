from __future__ import annotations

import random

import pytest

from knotmut.diagram import PlanarDiagram, add_bigon, add_kink, braid_closure, mirror, parse_pd, realize_dt
from knotmut.skein import (
    BudgetExceeded,
    LaurentPoly,
    LaurentPoly2,
    alexander,
    bracket_state_sum,
    homfly,
    homfly_to_alexander,
    homfly_to_jones,
    jones,
    kauffman_bracket,
    kauffman_poly,
)

LEFT_TREFOIL = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
FIGURE_EIGHT = realize_dt("4 6 8 2")
SAMPLES = [LEFT_TREFOIL, FIGURE_EIGHT, realize_dt("6 8 10 2 4"), realize_dt("4 10 14 12 2 8 6"),
           realize_dt("4 8 -12 2 -14 -6 10"), braid_closure([1, 2, 1, 2, 1, 2, 1, 2])]


def relabel(d: PlanarDiagram, seed: int) -> PlanarDiagram:
    labels = sorted({v for x in d.crossings for v in x})
    image = random.Random(seed).sample(range(100, 100 + 3 * len(labels)), len(labels))
    ren = dict(zip(labels, image))
    return PlanarDiagram(tuple(tuple(ren[v] for v in x) for x in d.crossings), d.loops)


# -- Laurent polynomials ---------------------------------------------------------
def test_laurent_arithmetic():
    t = LaurentPoly.var()
    p = t + t ** -1
    assert p * p == t ** 2 + 2 + t ** -2
    assert (p - p).is_constant() and not (p - p)
    assert p.min_degree() == -1 and p.max_degree() == 1 and p.span() == 2
    assert (p * p).exact_div(p) == p


def test_laurent_exact_division_rejects_remainder():
    t = LaurentPoly.var()
    with pytest.raises(ValueError):
        (t + 2).exact_div(t + 1)


def test_laurent_parse_and_json_roundtrip():
    p = LaurentPoly.parse("-t^-6+t^-5+t^-2-t^-1+2-t-t^4+t^5")
    assert p.coefficient(0) == 2 and p.coefficient(-6) == -1
    assert LaurentPoly.parse(str(p)) == p
    assert LaurentPoly.from_json(p.to_json()) == p
    exps = [e for e, _ in p.to_json()["terms"]]
    assert exps == sorted(exps)


def test_two_variable_json_and_table():
    p = homfly(LEFT_TREFOIL)
    assert LaurentPoly2.from_json(p.to_json()) == p
    ls, ms, cells = p.table()
    assert (ls, ms, cells) == ([-4, -2], [0, 2], [[-1, 2], [0, 1]])
    lines = p.render_table().splitlines()
    assert lines[0].split() == ["l^-4", "l^-2"]
    assert lines[2].split() == ["m^2", "1"]


# -- the bracket -----------------------------------------------------------------
def test_unknot_values():
    u = PlanarDiagram.unknot()
    for f in (kauffman_bracket, jones, homfly, kauffman_poly, alexander):
        assert f(u) == 1


@pytest.mark.parametrize("sign, exponent", [(1, 3), (-1, -3)])
def test_bracket_of_a_curl(sign, exponent):
    k = add_kink(LEFT_TREFOIL, 1, sign)
    ratio = kauffman_bracket(k).exact_div(kauffman_bracket(LEFT_TREFOIL))
    assert ratio == LaurentPoly.monomial(exponent, -1, "A")


def test_left_trefoil_values():
    assert jones(LEFT_TREFOIL) == LaurentPoly.parse("-t^-4+t^-3+t^-1")
    assert alexander(LEFT_TREFOIL) == LaurentPoly.parse("t^-1-1+t")
    assert jones(FIGURE_EIGHT) == LaurentPoly.parse("t^-2-t^-1+1-t+t^2")
    assert alexander(FIGURE_EIGHT) == LaurentPoly.parse("-t^-1+3-t")


@pytest.mark.parametrize("d", SAMPLES)
def test_sweep_matches_state_sum(d):
    assert kauffman_bracket(d) == bracket_state_sum(d)


def test_sweep_matches_state_sum_on_links():
    rng = random.Random(5)
    for _ in range(20):
        word = [rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randint(1, 9))]
        d = braid_closure(word, 4)
        assert kauffman_bracket(d) == bracket_state_sum(d)


# -- specializations and mirrors ---------------------------------------------------
@pytest.mark.parametrize("d", SAMPLES)
def test_homfly_specializes(d):
    p = homfly(d)
    assert homfly_to_jones(p) == jones(d)
    assert homfly_to_alexander(p) == alexander(d)


def test_specialization_rejects_odd_m_powers():
    with pytest.raises(ValueError):
        homfly_to_jones(LaurentPoly2.monomial(0, 1))


@pytest.mark.parametrize("d", SAMPLES)
def test_mirror_rules(d):
    m = mirror(d)
    assert jones(m) == jones(d).substitute(-1)
    assert homfly(m) == homfly(d).substitute(-1, 1)
    assert kauffman_poly(m) == kauffman_poly(d).substitute(-1, 1)
    assert alexander(m) == alexander(d)
    assert mirror(m) == d


def test_trefoil_is_chiral():
    assert homfly(LEFT_TREFOIL) != homfly(mirror(LEFT_TREFOIL))


# -- invariance ---------------------------------------------------------------------
def _all_invariants(d):
    return jones(d), homfly(d), kauffman_poly(d), alexander(d)


@pytest.mark.parametrize("d", SAMPLES[:4])
def test_relabeling_invariance(d):
    assert _all_invariants(relabel(d, 1)) == _all_invariants(d)


@pytest.mark.parametrize("seed", range(4))
def test_reidemeister_invariance(seed):
    rng = random.Random(seed)
    d = SAMPLES[seed]
    expected = _all_invariants(d)
    e = d
    for _ in range(2):
        labels = sorted({v for x in e.crossings for v in x})
        if rng.random() < 0.5:
            e = add_kink(e, rng.choice(labels), rng.choice([1, -1]), rng.choice([True, False]))
        else:
            f = rng.choice(e.faces)
            arcs = sorted({e.crossings[c][k] for c, k in f})
            if len(arcs) < 2:
                continue
            a, b = rng.sample(arcs, 2)
            e = add_bigon(e, a, b)
    assert _all_invariants(e) == expected


# -- budgets ---------------------------------------------------------------------
def test_bracket_width_budget():
    with pytest.raises(BudgetExceeded):
        kauffman_bracket(SAMPLES[3], max_width=2)


def test_skein_node_budget():
    with pytest.raises(BudgetExceeded):
        homfly(SAMPLES[3], node_limit=2)
    with pytest.raises(BudgetExceeded):
        kauffman_poly(SAMPLES[3], node_limit=2)
