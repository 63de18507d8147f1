from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from conftest import load
from cubicsoft.algebra import star_swap
from cubicsoft.classify import (
    REGISTRY,
    Interpretation,
    TheoremId,
    alpha_beta,
    classify,
    condition_report,
    hypothesis,
    side_condition,
    theorem1_witness,
    theorem2_boundary_check,
)
from cubicsoft.core import CubicSoftSet, ParameterId, constant_cubic_soft_set, make_grade
from cubicsoft.errors import NotBothInternalExternal, ParameterSetMismatch, UniverseMismatch
from cubicsoft.verify import enumerate_grades
from strategies import K, lift, raw_grades, soft_sets

E = ParameterId("e")


def single(grade, p=E):
    return CubicSoftSet(["x"], [p], {(p, "x"): grade})


def test_icss_table_internal():
    c = classify(load("icss_table"))
    assert c.internal and not c.external
    assert c.internal_violations == ()
    assert (ParameterId("e1"), "p1") in c.external_violations


def test_ecss_table_external():
    c = classify(load("ecss_table"))
    assert c.external and not c.internal
    # (e1,p2): fuzzy 0.6 sits exactly on A+
    g = load("ecss_table").grade("e1", "p2")
    assert g.fuzzy == g.ivf.hi


def test_degenerate_is_both():
    c = classify(load("degenerate"))
    assert c.internal and c.external


def test_violations_are_ordered():
    c = classify(load("first_example"))
    cells = list(c.external_violations)
    order = {(p, x): i for i, (p, x) in enumerate((p, x) for p in load("first_example").params for x in ("p1", "p2", "p3", "p4"))}
    assert [order[v] for v in cells] == sorted(order[v] for v in cells)


def test_theorem1_witness_first_example():
    w = theorem1_witness(load("first_example"))
    assert w == (ParameterId("e1"), "p1")
    g = load("first_example")[w]
    assert g.ivf.lo < g.fuzzy < g.ivf.hi


def test_theorem1_none_for_external():
    assert theorem1_witness(load("ecss_table")) is None
    assert theorem1_witness(constant_cubic_soft_set("hat1", ["x"], ["e"])) is None


def test_theorem2_examples():
    r = theorem2_boundary_check(single(make_grade("0.4", "0.4", "0.4")))
    assert r and r.pointwise_holds
    two = CubicSoftSet(
        ["x", "y"], [E], {(E, "x"): make_grade("0.2", "0.5", "0.2"), (E, "y"): make_grade("0.3", "0.6", "0.6")}
    )
    r = theorem2_boundary_check(two)
    assert r.holds and r.pointwise_holds
    assert all(c.in_global_bounds and c.on_own_endpoint for c in r.cells)
    with pytest.raises(NotBothInternalExternal):
        theorem2_boundary_check(load("icss_table"))


def test_star_hypothesis_on_worked_pair():
    f, g = load("star_f"), load("star_g")
    assert hypothesis(TheoremId.STAR_PU_ICSS, f, g)
    fs, gs = star_swap(f, g)
    assert classify(f).external and classify(g).external
    assert classify(fs).internal and classify(gs).internal


def test_ru_icss_boundary_equality():
    f = single(make_grade("0.3", "0.7", "0.3"))
    assert hypothesis(TheoremId.RU_ICSS, f, f)


def test_ri_icss_count_matches_oracle():
    expected = oracle.count_pairs(2, oracle.ri_icss_hypothesis)
    grades = enumerate_grades(2)
    got = sum(hypothesis(TheoremId.RI_ICSS, single(a), single(b)) for a, b in product(grades, repeat=2))
    assert len(grades) == 18
    assert got == expected == 68


def test_hypothesis_errors():
    with pytest.raises(UniverseMismatch):
        hypothesis(TheoremId.PU_ICSS, load("icss_table"), load("star_f"))
    with pytest.raises(ParameterSetMismatch):
        hypothesis(TheoremId.STAR_PU_ICSS, load("disjoint_a"), load("disjoint_b"))


def test_unary_hypothesis():
    assert hypothesis(TheoremId.COMP_ICSS, load("icss_table"))
    assert not hypothesis(TheoremId.COMP_ECSS, load("icss_table"))
    assert hypothesis(TheoremId.COMP_ECSS, load("ecss_table"))


def test_registry_is_complete():
    assert set(REGISTRY) == set(TheoremId)
    assert len(TheoremId) == 17


@given(raw_grades(), raw_grades())
def test_alpha_never_below_beta(a, b):
    alpha, beta = alpha_beta(lift(a), lift(b))
    assert alpha >= beta


def _bracket_oracle(a, b, t, lo_closed, hi_closed):
    al, ah, bl, bh = a[0], a[1], b[0], b[1]
    alpha = min(max(ah, bl), max(al, bh))
    beta = max(min(ah, bl), min(al, bh))
    return (beta <= t if lo_closed else beta < t) and (t <= alpha if hi_closed else t < alpha)


@pytest.mark.parametrize("tid", [TheoremId.PI_ECSS, TheoremId.PU_ECSS, TheoremId.RU_ECSS, TheoremId.RI_ECSS])
def test_bracket_conditions_match_oracle(tid):
    # written closedness of the (beta side, alpha side) endpoints
    written = {
        TheoremId.PI_ECSS: ("meet", False, True),
        TheoremId.PU_ECSS: ("join", True, False),
        TheoremId.RU_ECSS: ("meet", True, False),
        TheoremId.RI_ECSS: ("join", False, True),
    }[tid]
    term, wlo, whi = written
    closed = {
        Interpretation.AS_WRITTEN: (wlo, whi),
        Interpretation.OPEN_OPEN: (False, False),
        Interpretation.CLOSED_CLOSED: (True, True),
    }
    grades = oracle.grades(2)
    for interp, (lo_c, hi_c) in closed.items():
        for a, b in product(grades, repeat=2):
            t = min(a[2], b[2]) if term == "meet" else max(a[2], b[2])
            want = _bracket_oracle(a, b, t, lo_c, hi_c)
            got = side_condition(tid, single(lift(a, 2)), single(lift(b, 2)), interp)
            assert got == want, (interp, a, b)


def test_vacuous_cells_are_flagged():
    # alpha == beta: half-open and open readings leave an empty set
    a = single(make_grade("0.5", "0.5", "0.5"))
    for interp, vac in [
        (Interpretation.AS_WRITTEN, True),
        (Interpretation.OPEN_OPEN, True),
        (Interpretation.CLOSED_CLOSED, False),
    ]:
        [cell] = condition_report(TheoremId.PI_ECSS, a, a, interp)
        assert cell.vacuous is vac
        assert cell.alpha == cell.beta == Fraction(1, 2)
        assert cell.holds is (not vac)


@settings(max_examples=200)
@given(raw_grades(), st.data())
def test_moving_fuzzy_inside_keeps_internality(t, data):
    lo, hi, _ = t
    f = single(lift(t))
    if not classify(f).internal:
        return
    d = data.draw(st.integers(lo, hi))
    assert classify(single(lift((lo, hi, d)))).internal


@settings(max_examples=100)
@given(soft_sets())
def test_theorem1_on_random_sets(f):
    c = classify(f)
    w = theorem1_witness(f)
    assert (w is None) == c.external
    if w is not None:
        g = f[w]
        assert g.ivf.lo < g.fuzzy < g.ivf.hi


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(0, K), st.integers(0, K), st.booleans()), min_size=1, max_size=4))
def test_theorem2_pointwise_on_both_sets(cells):
    # build grades that are internal and external: fuzzy at an endpoint
    universe = [f"x{i}" for i in range(len(cells))]
    grades = {}
    for x, (a, b, upper) in zip(universe, cells):
        lo, hi = min(a, b), max(a, b)
        grades[(E, x)] = lift((lo, hi, hi if upper else lo))
    f = CubicSoftSet(universe, [E], grades)
    r = theorem2_boundary_check(f)
    assert r.holds and r.pointwise_holds


def test_both_condition_implies_closed_bracket_condition():
    grades = enumerate_grades(2)
    for a, b in product(grades, repeat=2):
        f, g = single(a), single(b)
        if side_condition(TheoremId.PI_BOTH, f, g):
            assert side_condition(TheoremId.PI_ECSS, f, g, Interpretation.CLOSED_CLOSED)
        if side_condition(TheoremId.RI_BOTH, f, g):
            assert side_condition(TheoremId.RI_ECSS, f, g, Interpretation.CLOSED_CLOSED)


def test_classification_json():
    doc = classify(load("icss_table")).to_json()
    assert doc["internal"] is True and doc["internal_violations"] == []
    assert doc["external_violations"][0] == {"parameter": "e1", "element": "p1"}
