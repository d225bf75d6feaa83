import itertools
from fractions import Fraction

import pytest

from nzflow.criticality import (
    NotCriticalError,
    bounds_report,
    canonical_edges,
    certify_criticality,
    connected_simple_graphs,
    isomorphic_brute_force,
    lemma_checks,
    simple_graph_classes,
    survey,
)
from nzflow.families import k2, k33e, k4, wheel
from nzflow.flows import verify_flow
from nzflow.multigraph import build_graph, relabel


def test_k2_and_k4_critical():
    assert certify_criticality(k2()).is_critical
    rep = certify_criticality(k4())
    assert rep.is_critical and all(rep.contraction_has_flow.values()) and len(rep.contraction_has_flow) == 6


def test_wheel4_not_critical_with_flow_evidence():
    rep = certify_criticality(wheel(4))
    assert not rep.is_critical
    assert verify_flow(wheel(4), rep.failing_evidence).nowhere_zero


def test_failing_edge_evidence():
    # K4 plus a pendant edge: no flow, and contracting the pendant edge leaves K4
    g = build_graph(5, [(a, b) for a, b in itertools.combinations(range(4), 2)] + [(3, 4)])
    rep = certify_criticality(g)
    assert not rep.is_critical and rep.flow is None
    assert rep.failing_edge == 0


def test_disconnected_not_critical():
    rep = certify_criticality(build_graph(4, [(0, 1), (2, 3)]))
    assert not rep.is_critical and not rep.connected


def test_loop_prevents_criticality():
    g = build_graph(2, [(0, 1), (1, 1)])
    rep = certify_criticality(g)
    assert not rep.is_critical and rep.failing_edge == 1


def test_bounds_wheel5():
    g = wheel(5)
    b = bounds_report(g, certify_criticality(g))
    assert (b.n, b.m, b.n3) == (6, 10, 5)
    assert b.l_main_value == 10 and b.l_main_equality and b.wheel and b.odd_wheel
    assert b.thm_best and 3 * b.m == 5 * b.n


def test_bounds_k33e7():
    g = k33e(7)
    b = bounds_report(g, certify_criticality(g))
    assert (b.n, b.m, b.n3) == (7, 13, 4)
    assert b.m >= Fraction(35, 3) and b.m >= Fraction(58, 5)
    assert b.thm_best and b.thm_lb
    assert b.l_main_value == 10 and not b.l_main_equality and not b.wheel
    assert b.deg3_forest and b.lemma4


def test_bounds_k4_is_exempt():
    b = bounds_report(k4(), certify_criticality(k4()))
    assert b.excluded and b.l_main_value == 7 and b.m == 6 and not b.l_main_holds


def test_bounds_rejects_non_critical():
    with pytest.raises(NotCriticalError):
        bounds_report(wheel(4), certify_criticality(wheel(4)))


@pytest.mark.parametrize("g", [k2(), k4(), wheel(5), k33e(7)], ids=["k2", "k4", "w5", "k33e7"])
def test_lemma_checks_on_named_critical_graphs(g):
    assert lemma_checks(g).violations() == []


def test_isomorphism_helpers():
    g = wheel(5)
    perm = [3, 5, 0, 1, 4, 2]
    h = relabel(g, perm)
    assert isomorphic_brute_force(g, h)
    assert canonical_edges(g) == canonical_edges(h)
    assert not isomorphic_brute_force(g, k33e(7))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_graph_class_counts(n, count):
    assert len(simple_graph_classes(n)) == count


@pytest.mark.parametrize("n,count", [(2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_connected_class_counts(n, count):
    assert len(connected_simple_graphs(n)) == count


def test_survey_n2_multigraphs():
    census = survey(2, simple_only=False)
    entry = census.entries[1]
    assert entry.examined == 3
    assert [g.endpoint_list() for g in entry.critical] == [[(0, 1)]]


def test_survey_small_simple():
    census = survey(6)
    by_n = {e.n: e for e in census.entries}
    assert [g.m for g in by_n[4].critical] == [6]
    assert by_n[5].critical == []
    w5 = canonical_edges(wheel(5))
    assert any(canonical_edges(g) == w5 for g in by_n[6].critical)
    assert by_n[6].ell <= 10
    assert all(g.m >= 10 for g in by_n[6].critical)
    assert census.all_bounds_held and census.lemma_violations == 0


def test_survey_rejects_large_n():
    with pytest.raises(ValueError):
        survey(8)
