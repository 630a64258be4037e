"""Avoidance checks: premises, dual routes, certificates, and the
sharpness construction."""

from fractions import Fraction
from itertools import combinations

import pytest

from factorbench import (
    CapExceeded,
    Graph,
    build_extremal_H,
    complete_graph,
    cycle_graph,
    delete_vertices,
    generate_random,
    path_graph,
    star_graph,
)
from factorbench.avoidance import (
    check_edge_avoiding,
    check_edge_deletion_star,
    check_lemma_D1,
    check_matching_deletion,
    check_theorem_D,
    check_theorem_E,
    check_vertex_deletion_all,
    enumerate_matchings,
    rho,
    theorem_premises,
)
from factorbench.factors import delta, find_ab_factor, low_set
from factorbench.toughness import threshold


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


# -- vertex deletion --------------------------------------------------------------


def test_vertex_deletion_k6_holds():
    verdict = check_vertex_deletion_all(complete_graph(6), 2, 3, 1)
    assert verdict.conclusion_holds
    assert verdict.outcome == "verified"
    assert verdict.premises_hold


def test_vertex_deletion_c5_12_holds():
    # C5 - v is a path with degrees in [1, 2]
    verdict = check_vertex_deletion_all(cycle_graph(5), 1, 2, 1)
    assert verdict.conclusion_holds


def test_vertex_deletion_counterexample_re_verifies():
    # C6 - v is P5, whose endpoints block a [2,3]-factor
    g = cycle_graph(6)
    verdict = check_vertex_deletion_all(g, 2, 3, 1)
    assert not verdict.conclusion_holds
    ce = verdict.counterexample
    res = delete_vertices(g, ce.deletion.members)
    index = {old: new for new, old in enumerate(res.original_labels)}
    s_local = [index[v] for v in ce.certificate.violation.s]
    assert delta(res.graph, s_local, 2, 3) == ce.certificate.violation.delta < 0


def test_vertex_deletion_routes_and_caps():
    with pytest.raises(CapExceeded):
        check_vertex_deletion_all(complete_graph(6), 2, 3, 1, cap_deletions=3)
    with pytest.raises(CapExceeded):
        check_vertex_deletion_all(Graph(14), 1, 2, 1, cap_n=12)


def test_vertex_deletion_validates_parameters():
    with pytest.raises(ValueError):
        check_vertex_deletion_all(complete_graph(5), 2, 2, 1)
    with pytest.raises(ValueError):
        check_vertex_deletion_all(complete_graph(5), 1, 2, 0)


def test_sharpness_h_fails_with_papers_deletion_and_witness():
    w = build_extremal_H(1, 2, 3, 1)
    assert w.witness_ratio == Fraction(9, 4) < threshold("A", a=2, b=3, n=1)
    verdict = check_vertex_deletion_all(
        w.graph, 2, 3, 1, deletions=[w.default_v0()], witnesses=[w.clique_small]
    )
    assert verdict.outcome == "vacuous"  # premises fail: sharpness, not refutation
    assert not verdict.conclusion_holds
    cert = verdict.counterexample.certificate.violation
    assert set(cert.s) == set(w.clique_small)
    assert set(cert.t) == set(w.isolated_row)
    assert cert.delta == -1


def test_targeted_mode_rejects_overlapping_witness():
    w = build_extremal_H(1, 2, 3, 1)
    v0 = w.default_v0()
    with pytest.raises(ValueError, match="intersects"):
        check_vertex_deletion_all(w.graph, 2, 3, 1, deletions=[v0], witnesses=[v0])


def test_targeted_mode_on_positive_instance():
    verdict = check_vertex_deletion_all(
        complete_graph(6), 2, 3, 1, deletions=[(0,)], witnesses=[(1, 2)]
    )
    assert verdict.conclusion_holds


# -- edge deletion / star factors ---------------------------------------------------


def test_edge_deletion_star_c4():
    verdict = check_edge_deletion_star(cycle_graph(4), 2, 1)
    assert verdict.premises_hold  # min degree 2 and I(C4) = 1 >= 1/(2-1)
    assert verdict.conclusion_holds
    assert verdict.outcome == "verified"


def test_edge_deletion_star_claw_is_vacuous():
    verdict = check_edge_deletion_star(star_graph(3), 2, 1)
    assert not verdict.premises_hold  # leaves have degree 1 < 1 + n
    assert verdict.outcome == "vacuous"


def test_edge_deletion_star_k4_exhaustive():
    verdict = check_edge_deletion_star(complete_graph(4), 2, 1)
    assert verdict.conclusion_holds


def test_edge_deletion_star_odd_n_range_is_premise_failure():
    # n = ceil(m/2) for odd m is out of range, recorded not raised
    verdict = check_edge_deletion_star(complete_graph(5), 3, 2)
    names = {p.name: p.holds for p in verdict.premises}
    assert names["n_range"] is False
    assert verdict.outcome == "vacuous"


def test_edge_deletion_star_counterexample():
    # two disjoint edges: deleting one strands two vertices
    g = Graph(4, [(0, 1), (2, 3)])
    verdict = check_edge_deletion_star(g, 2, 1)
    assert not verdict.conclusion_holds
    ce = verdict.counterexample
    assert ce.deletion.kind == "edges"
    assert ce.certificate.violation.delta < 0


# -- matching deletion ----------------------------------------------------------------


def test_matching_enumeration_on_c4():
    assert len(enumerate_matchings(cycle_graph(4), 2)) == 2
    assert len(enumerate_matchings(complete_graph(6), 1)) == 15


def test_matching_deletion_k6_holds():
    verdict = check_matching_deletion(complete_graph(6), 2, 3, 1)
    assert verdict.premises_hold
    assert verdict.conclusion_holds
    # the recorded toughness premise: I(K6) = 5 >= 2
    tough = next(p for p in verdict.premises if p.name == "toughness")
    assert "5" in tough.detail and tough.holds


def test_matching_deletion_counterexample():
    verdict = check_matching_deletion(cycle_graph(4), 2, 3, 1)
    assert not verdict.conclusion_holds
    assert verdict.outcome == "vacuous"  # premises fail on C4
    assert verdict.counterexample.deletion.kind == "matching"


# -- rho and single-edge avoidance ------------------------------------------------------


def test_rho_both_endpoints_low():
    r = rho(cycle_graph(4), (0, 1), [], 2, 3)
    assert r.value == 2
    assert r.u_location == r.v_location == "T'"


def test_rho_zero_on_k4():
    r = rho(complete_graph(4), (0, 1), [], 2, 3)
    assert r.value == 0 and r.case == "otherwise"


def test_rho_pendant_case():
    g = Graph(5, list(combinations(range(4), 2)) + [(0, 4)])
    r = rho(g, (0, 4), [], 2, 3)
    assert r.value == 1
    assert {r.u_location, r.v_location} == {"T'", "W'"}


def test_rho_endpoint_in_s_is_zero():
    r = rho(cycle_graph(4), (0, 1), [0], 2, 3)
    assert r.value == 0 and r.u_location == "S"


def test_rho_requires_an_edge():
    with pytest.raises(ValueError):
        rho(cycle_graph(4), (0, 2), [], 2, 3)


def test_edge_avoiding_k4_holds_and_c4_fails():
    assert check_edge_avoiding(complete_graph(4), (0, 1), 2, 3).conclusion_holds
    verdict = check_edge_avoiding(cycle_graph(4), (0, 1), 2, 3)
    assert not verdict.conclusion_holds
    cert = verdict.counterexample.certificate.violation
    assert cert.s == () and cert.delta < 0
    assert check_edge_avoiding(cycle_graph(4), (0, 1), 1, 2).conclusion_holds


def test_edge_avoiding_agrees_with_direct_exhaustively():
    for g in all_graphs(5):
        if g.min_degree() < 1:
            continue
        for e in g.edges:
            for a, b in [(1, 2), (2, 3)]:
                verdict = check_edge_avoiding(g, e, a, b)
                direct = find_ab_factor(
                    Graph(g.n, [x for x in g.edges if x != e]), a, b
                ).exists
                assert verdict.conclusion_holds == direct


# -- theorem E ---------------------------------------------------------------------------


def test_theorem_e_k7():
    verdict = check_theorem_E(complete_graph(7), 2, 3)
    assert verdict.premises_hold and verdict.conclusion_holds
    pair = next(p for p in verdict.premises if p.name == "pair_deletions")
    assert "21" in pair.detail


def test_theorem_e_c5_vacuous():
    verdict = check_theorem_E(cycle_graph(5), 2, 3)
    assert not verdict.premises_hold  # min degree 2 < a + 2 = 4
    assert verdict.outcome == "vacuous"


def test_theorem_e_proof_step_single_vertex_sets():
    # with min degree >= a+2, any single-vertex S has empty T and delta = b
    g = complete_graph(7)
    for v in range(7):
        assert low_set(g, [v], 2) == ()
        assert delta(g, [v], 2, 3) == 3 >= 2


# -- theorem D ---------------------------------------------------------------------------


def test_theorem_d_k7_verified():
    verdict = check_theorem_D(complete_graph(7), 2, 3, 2)
    assert verdict.premises_hold and verdict.conclusion_holds


def test_theorem_d_n1_reduces_to_whole_graph():
    verdict = check_theorem_D(complete_graph(6), 2, 3, 1)
    assert verdict.conclusion_holds  # K6 itself has a [2,3]-factor


def test_theorem_d_antecedent_false_is_vacuous():
    verdict = check_theorem_D(cycle_graph(6), 2, 3, 1)
    ante = next(p for p in verdict.premises if p.name == "antecedent")
    assert not ante.holds
    assert verdict.outcome == "vacuous"
    assert verdict.conclusion_holds  # C6 is its own [2,3]-factor


# -- lemma D1 ----------------------------------------------------------------------------


def test_lemma_d1_k8():
    verdict = check_lemma_D1(complete_graph(8), 2, 3, 1, 2)
    assert verdict.premises_hold and verdict.conclusion_holds
    tough = next(p for p in verdict.premises if p.name == "toughness")
    assert "7" in tough.detail


def test_lemma_d1_rejects_bad_k():
    for k in (1, 4):
        with pytest.raises(ValueError):
            check_lemma_D1(complete_graph(8), 2, 3, 1, k)


def test_lemma_d1_vacuous_instance():
    verdict = check_lemma_D1(cycle_graph(5), 2, 3, 1, 2)
    assert verdict.outcome == "vacuous"


def test_lemma_d1_conclusion_violation_is_certified():
    # sparse graph failing the premises can also fail the bound; the
    # certificate must re-verify
    g = path_graph(5)
    verdict = check_lemma_D1(g, 2, 3, 1, 2)
    if not verdict.conclusion_holds:
        cert = verdict.counterexample.certificate.violation
        assert delta(g, cert.s, 2, 3) == cert.delta < cert.bound == 2
        assert low_set(g, cert.s, 2) == cert.t != ()


# -- premises helper ------------------------------------------------------------------------


def test_theorem_premises_match_thresholds():
    g = complete_graph(8)
    prem = theorem_premises("A", g, a=2, b=3, n=1)
    assert all(p.holds for p in prem)
    assert "7/3" in prem[1].detail
    prem_c = theorem_premises("C", g, a=2, b=3, n=1)
    assert "2" in prem_c[1].detail


def test_theorem_premises_unknown_tag():
    with pytest.raises(ValueError):
        theorem_premises("Z", complete_graph(3), a=1, b=2, n=1)


# -- route agreement over a corpus ------------------------------------------------------------


def test_vertex_deletion_route_agreement_random():
    for seed in range(30):
        g = generate_random(7, Fraction(3, 5), seed)
        # both routes are executed and compared inside; completing without
        # a RuntimeError is the agreement check
        verdict = check_vertex_deletion_all(g, 2, 3, 1)
        if verdict.conclusion_holds:
            assert verdict.counterexample is None


def test_verdict_json_shape():
    verdict = check_vertex_deletion_all(complete_graph(6), 2, 3, 1)
    d = verdict.to_json_dict()
    assert d["theorem"] == "A"
    assert d["conclusion"] is True
    assert d["outcome"] == "verified"
    assert set(d["premises"]) == {"min_degree", "toughness"}
