import json
import pytest
from fractions import Fraction as F

from degreescope.arithmetic import Arithmetic
from degreescope.ensemble import MergePolicy
from degreescope.errors import ValidationError
from degreescope.graph import Graph, DeletionRule, DegreeDistribution, load_edge_list
from degreescope.kernel import EvolutionRule, ReassignmentForm
from degreescope.simulation import SimConfig
from degreescope.verify import *

SAMPLE = load_edge_list('datasets/graphs/sample.edges')
DP = DeletionRule.DEGREE_PROPORTIONAL


# region Enumeration against kernel
def test_sample_graph_agrees():
    report = verify_theorem1(SAMPLE, DP)

    assert report.passed
    assert report.difference == 0
    assert report.enumerated.probs == reference.SAMPLE_AVERAGE
    assert report.form_gap == 0
    assert [w for _, w, _ in report.outcomes] == [F(1, 8), F(3, 8), F(2, 8), F(2, 8)]

def test_sample_rows_match_reference():
    report = verify_theorem1(SAMPLE, DP)

    rows = {(row.source.n, row.source.k): dict(row.targets) for row in report.rows}
    assert rows == reference.SAMPLE_TRANSITION_ROWS

def test_prediction_applies_reported_rows():
    report = verify_theorem1(SAMPLE, DP)

    assert report.predicted.probs == reference.SAMPLE_AVERAGE
    assert report.image_gap == 0

@pytest.mark.parametrize('rule', list(DeletionRule))
def test_rows_agree_with_decay_image(rule):
    for g in (Graph.path(4), Graph.star(5), load_edge_list('datasets/graphs/isolated.edges')):
        report = verify_theorem1(g, rule)
        assert report.image_gap == 0
        assert sum(report.predicted) == 1

def test_sample_listing_discrepancy_is_noted():
    report = verify_theorem1(SAMPLE, DP)

    assert len(report.notes) == 1
    assert 'node 4' in report.notes[0]

def test_no_notes_for_other_graphs():
    assert verify_theorem1(Graph.path(4), DP).notes == []

def test_float_mode_agrees():
    report = verify_theorem1(SAMPLE, DP, Arithmetic.FLOAT)

    assert report.passed
    assert report.difference < 1e-10

def test_complete_graph_uniform():
    report = verify_theorem1(Graph.complete(4), DeletionRule.UNIFORM)

    assert report.passed
    assert report.enumerated.probs == (F(0), F(0), F(1), F(0))

@pytest.mark.parametrize('merge', list(MergePolicy))
def test_merge_policy_does_not_change_verdict(merge):
    assert verify_theorem1(Graph.complete(3), DeletionRule.UNIFORM, merge=merge).passed

def test_isolated_node_graph():
    g = load_edge_list('datasets/graphs/isolated.edges')

    for rule in DeletionRule:
        assert verify_theorem1(g, rule).passed

def test_report_json():
    data = json.loads(verify_theorem1(SAMPLE, DP).to_json())

    assert data['passed'] is True
    assert data['rule'] == 'degree-proportional'
    assert len(data['outcomes']) == 4

def test_corpus_size():
    assert len(small_graph_corpus(3, 6)) == 4 + 11 + 34 + 156

def test_corpus_beyond_atlas():
    with pytest.raises(ValueError):
        small_graph_corpus(3, 8)

def test_small_graph_corpus_agrees():
    report = verify_corpus(small_graph_corpus(3, 6))

    assert report.passed
    assert report.max_difference == 0
    assert report.max_form_gap == 0
    assert report.max_image_gap == 0

def test_corpus_workers():
    graphs = small_graph_corpus(3, 4)

    assert verify_corpus(graphs, workers=2).to_dict() == verify_corpus(graphs).to_dict()
# endregion


# region Uniform deletion identity
@pytest.mark.parametrize('n, k, same, lower', [
    (2, 0, F(1), F(1)),
    (4, 1, F(2, 3), F(2, 3)),
    (5, 0, F(1), F(1, 4)),
    (5, 3, F(1, 4), F(1)),
])
def test_coefficients(n, k, same, lower):
    checks, mixture_ok = check_size(n)
    check = checks[k]

    assert mixture_ok
    assert check.passed
    assert (check.kernel_same, check.kernel_lower) == (same, lower)

@pytest.mark.parametrize('form', list(ReassignmentForm))
def test_uniform_identity_sweep(form):
    report = verify_theorem2(50, form=form)

    assert report.passed
    assert len(report.checks) == sum(n - 1 for n in range(2, 51))

def test_uniform_identity_proved_symbolically():
    report = verify_theorem2(5, symbolic_max=3)

    assert report.proofs == {2: True, 3: True}
    assert report.passed

def test_uniform_identity_needs_three_nodes():
    with pytest.raises(ValidationError):
        verify_theorem2(2)

def test_proof_rejects_single_node():
    with pytest.raises(ValueError):
        prove_uniform_update(1)
# endregion


# region Kernel against simulation
@pytest.mark.parametrize('probs, expected', [
    ((0.1, 0.5, 0.3, 0.1), True),
    ((0.5, 0.2, 0.3), False),
    ((1.0,), True),
])
def test_tail_monotone(probs, expected):
    assert is_tail_monotone(DegreeDistribution(probs)) == expected

def test_uniform_rule_agrees_with_simulation():
    rule = EvolutionRule(p=0.7, m=1, n_floor=2, n_cap=10)
    cfg = SimConfig(rule, t_max=5000, burn_in=500, trials=8, seed=2024)

    report = compare_methods(rule, cfg, threshold=0.05)

    assert report.diagnostics.converged
    assert report.total_variation <= 0.05
    assert report.passed is True
    assert report.tail_monotone is None

def test_growing_network_matches_simulation():
    rule = EvolutionRule(p=0.7, m=2, n_floor=3, n_cap=60)
    cfg = SimConfig(rule, t_max=20_000, burn_in=10_000, trials=12, seed=2024)

    report = compare_methods(rule, cfg)

    assert report.simulated.samples >= 100_000
    assert report.diagnostics.converged
    assert report.total_variation <= 0.02
    assert report.passed is True

def test_mean_field_rule_at_full_cap():
    rule = EvolutionRule(p=0.7, m=2, delete=DP, n_floor=3, n_cap=60)
    cfg = SimConfig(rule, t_max=400, trials=2, seed=5)

    report = compare_methods(rule, cfg)

    assert report.diagnostics.converged
    assert report.passed is None
    assert all(p >= 0 for p in report.kernel)

def test_tiny_threshold_fails():
    rule = EvolutionRule(p=0.7, m=1, n_floor=2, n_cap=10)
    cfg = SimConfig(rule, t_max=50, trials=2, seed=3)

    report = compare_methods(rule, cfg, threshold=0)

    assert report.passed is False

def test_mean_field_rule_is_informational():
    rule = EvolutionRule(p=0.7, m=2, delete=DP, n_floor=3, n_cap=12)
    cfg = SimConfig(rule, t_max=200, trials=2, seed=5)

    report = compare_methods(rule, cfg, max_iters=50)

    assert report.passed in (None, False)
    assert any('mean-field' in note for note in report.notes)

def test_non_convergence_fails_comparison():
    rule = EvolutionRule(p=0.7, m=1, n_floor=2, n_cap=10)
    cfg = SimConfig(rule, t_max=50, trials=2, seed=3)

    report = compare_methods(rule, cfg, max_iters=2, threshold=1)

    assert report.passed is False
    assert any('solver stopped' in note for note in report.notes)

def test_mismatched_rules_rejected():
    rule = EvolutionRule(p=0.7, m=1)
    cfg = SimConfig(EvolutionRule(p=0.6, m=1), t_max=10)

    with pytest.raises(ValidationError) as exc:
        compare_methods(rule, cfg)

    assert exc.value.field == 'rule'

def test_compare_report_json():
    rule = EvolutionRule(p=0.7, m=1, n_floor=2, n_cap=8)
    report = compare_methods(rule, SimConfig(rule, t_max=40, trials=2, seed=1))

    data = json.loads(report.to_json())

    assert set(data) >= {'kernel', 'simulated', 'diagnostics', 'total_variation', 'passed'}
# endregion
