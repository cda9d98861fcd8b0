import json
from fractions import Fraction

import pytest

from reliab.corpus import small_connected_graphs
from reliab.evaluators import EvalStrategy, zrel_coeffs_direct
from reliab.graph import Graph, bundle_graph, complete_graph, cycle_graph, path_graph
from reliab.harness import (
    FixedWeightEvaluator,
    RecoveryError,
    evaluate_sequence,
    lift_shift,
    lift_small_w,
    recover_rel_coeffs,
    recover_zrel_coeffs,
)
from reliab.poly import UniPoly
from reliab.transforms import BounceSeq, ShiftResult, two_terminal_shift

F = Fraction
C5_REL = UniPoly((1, 0, -10, 20, -15, 4), "p")


def test_recover_c5():
    report = recover_zrel_coeffs(cycle_graph(5), 7)
    assert report.recovered_w == UniPoly((0, 0, 0, 0, 5, 1))
    assert report.verdict == "PASS"
    assert report.collapse_ok


def test_recover_k3():
    assert recover_zrel_coeffs(complete_graph(3), 7).recovered_w == UniPoly((0, 0, 3, 1))


def test_recover_tree():
    tree = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert recover_zrel_coeffs(tree, 7).recovered_w == UniPoly.monomial(4)


def test_recover_preconditions():
    with pytest.raises(ValueError):
        recover_zrel_coeffs(bundle_graph(2), 7)
    with pytest.raises(ValueError):
        recover_zrel_coeffs(Graph.from_edges(3, [(0, 1)]), 7)
    with pytest.raises(ValueError):
        recover_zrel_coeffs(cycle_graph(5), 6)


@pytest.mark.parametrize(
    "w, k, lifted",
    [(F(1), 5, F(211, 32)), (F(6), 2, F(15)), (F(4), 2, F(8))],
)
def test_lift_examples(w, k, lifted):
    lift = lift_small_w(w)
    assert (lift.k, lift.w_lifted) == (k, lifted)
    assert two_terminal_shift(lift.gadget).new_weight == lifted
    assert two_terminal_shift(lift.gadget) == lift_shift(k, w)
    assert (w / 2 + 1) ** (k - 1) - 1 <= 6


def test_lift_rejects():
    for w in (0, -1, F(13, 2)):
        with pytest.raises(ValueError):
            lift_small_w(w)


def test_recover_rel_no_lift():
    report = recover_rel_coeffs(cycle_graph(5), F(1, 8))
    assert report.lift is None
    assert report.recovered_p == C5_REL


def test_recover_rel_with_lift():
    report = recover_rel_coeffs(cycle_graph(5), F(1, 2))
    assert report.lift.k == 5
    assert report.recovered_p == C5_REL
    assert report.collapse_ok


def test_recover_k2():
    for p in (F(1, 8), F(1, 2), F(9, 10)):
        assert recover_rel_coeffs(path_graph(1), p).recovered_p == UniPoly((1, -1), "p")


def test_report_invariants():
    g = complete_graph(4)
    report = recover_rel_coeffs(g, F(1, 3))
    coeffs = report.recovered_w.coeffs
    assert report.recovered_w.degree <= g.m
    assert next(i for i, c in enumerate(coeffs) if c) == g.n - 1
    assert report.abscissae_distinct and report.abscissae_decreasing
    l = 3
    for rec in report.records:
        assert rec.inflated_m == g.m * rec.sequence.edge_count
        assert rec.sequence.edge_count <= 3 * l * (l + 1) // 2


def test_report_json():
    data = json.loads(json.dumps(recover_rel_coeffs(complete_graph(3), F(1, 2)).to_dict()))
    assert data["verdict"] == "PASS"
    assert data["lift"] == {"k": 5, "w_lifted": "211/32"}
    assert data["recovered_p"] == "1 0 -3 2"
    assert len(data["sequences"]) == 4
    assert {"sequence", "w_S", "C_S", "value", "point", "collapse_ok"} <= set(data["sequences"][0])


@pytest.mark.parametrize(
    "g, strategy",
    [
        (path_graph(1), EvalStrategy("subset_dp", sp_preprocess=False)),
        (path_graph(2), EvalStrategy("brute_force", sp_preprocess=False)),
    ],
)
def test_blind_mode(g, strategy):
    report = recover_zrel_coeffs(g, 7, strategy)
    assert report.verdict == "PASS"


def test_blind_mode_needs_raised_cap(monkeypatch):
    from reliab.config import CapExceededError

    blind = EvalStrategy("brute_force", sp_preprocess=False)
    with pytest.raises(CapExceededError):
        recover_zrel_coeffs(complete_graph(3), 7, blind)
    monkeypatch.setenv("RELIAB_BRUTE_CAP", "27")
    assert recover_zrel_coeffs(complete_graph(3), 7, blind).verdict == "PASS"


def test_sequence_collapse_matches_closed_form():
    g = complete_graph(3)
    rec = evaluate_sequence(g, BounceSeq((3, 2)), FixedWeightEvaluator(F(7)))
    assert rec.collapse_ok
    assert set(rec.collapsed_weights) == {rec.w_S}


def test_parallel_workers_match_sequential():
    g = cycle_graph(4)
    a = recover_rel_coeffs(g, F(1, 2), workers=2)
    b = recover_rel_coeffs(g, F(1, 2))
    assert [r.point for r in a.records] == [r.point for r in b.records]
    assert a.recovered_w == b.recovered_w


def test_duplicate_abscissae_is_hard_failure(monkeypatch):
    import reliab.harness as harness

    monkeypatch.setattr(harness, "bounce_family", lambda m: [BounceSeq((2,))] * (m + 1))
    with pytest.raises(RecoveryError):
        harness.recover_zrel_coeffs(path_graph(1), 7)


def test_all_small_graphs_both_regimes():
    for g in small_connected_graphs(4):
        for p in (F(1, 8), F(1, 2)):
            report = recover_rel_coeffs(g, p)
            assert report.recovered_w == zrel_coeffs_direct(g)
