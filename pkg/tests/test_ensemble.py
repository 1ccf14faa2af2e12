import pytest
from fractions import Fraction as F
from hypothesis import given, settings

from degreescope.arithmetic import Arithmetic
from degreescope.ensemble import *
from degreescope.errors import EnumerationCapError, ValidationError
from degreescope.graph import Graph, DeletionRule, degree_distribution, load_edge_list

from strategies import graphs

SAMPLE = load_edge_list('datasets/graphs/sample.edges')


# region GraphEnsemble
def test_weights_must_sum_to_one():
    with pytest.raises(ValidationError):
        GraphEnsemble(((Graph.complete(3), F(1, 2)),))

def test_weights_must_be_positive():
    with pytest.raises(ValidationError):
        GraphEnsemble(((Graph.complete(3), F(1)), (Graph.empty(2), F(0))))

def test_empty_ensemble_rejected():
    with pytest.raises(ValidationError):
        GraphEnsemble(())

def test_json_conversion(tmp_path):
    e = GraphEnsemble(((Graph.complete(3), F(1, 3)), (Graph.empty(2), F(2, 3))))
    path = tmp_path / 'ensemble.json'

    e.save_json(str(path))
    loaded = GraphEnsemble.load_json(str(path))

    assert loaded.members == e.members
    assert loaded.arithmetic == Arithmetic.EXACT
# endregion


# region Enumeration
def test_sample_degree_proportional():
    outcomes = enumerate_deletion_step(GraphEnsemble.singleton(SAMPLE), DeletionRule.DEGREE_PROPORTIONAL)

    assert [weight for _, weight in outcomes] == [F(1, 8), F(3, 8), F(2, 8), F(2, 8)]
    assert [sorted(g.node_labels) for g, _ in outcomes] == [['2', '3', '4'], ['1', '3', '4'], ['1', '2', '4'], ['1', '2', '3']]

def test_sample_average():
    outcomes = enumerate_deletion_step(GraphEnsemble.singleton(SAMPLE), DeletionRule.DEGREE_PROPORTIONAL)

    assert average_degree_distribution(outcomes, length=4).probs == (F(1, 8), F(14, 24), F(7, 24), F(0))

def test_path_degree_proportional():
    outcomes = enumerate_deletion_step(GraphEnsemble.singleton(Graph.path(3)), DeletionRule.DEGREE_PROPORTIONAL)

    assert [(g.edges, w) for g, w in outcomes] == [
        (frozenset([('2', '3')]), F(1, 4)),
        (frozenset(), F(1, 2)),
        (frozenset([('1', '2')]), F(1, 4)),
    ]
    assert average_degree_distribution(outcomes, length=3).probs == (F(1, 2), F(1, 2), F(0))

@pytest.mark.parametrize('merge, expected', [
    (MergePolicy.LABELS, [F(1, 3)] * 3),
    (MergePolicy.ISOMORPHISM, [F(1)]),
])
def test_k3_merge_policies(merge, expected):
    outcomes = enumerate_deletion_step(GraphEnsemble.singleton(Graph.complete(3)), DeletionRule.UNIFORM, merge=merge)

    assert [w for _, w in outcomes] == expected
    assert all(g.degrees() == (1, 1) for g, _ in outcomes)

def test_identical_outcomes_merge_on_labels():
    # deleting node 3 from either member leaves the same labelled edge 1-2
    e = GraphEnsemble((
        (Graph.from_edges([(1, 2), (2, 3)]), F(1, 2)),
        (Graph.from_edges([(1, 2), (1, 3)]), F(1, 2)),
    ))

    outcomes = enumerate_deletion_step(e, DeletionRule.UNIFORM)

    merged = [w for g, w in outcomes if g.key == Graph.from_edges([(1, 2)]).key]
    assert merged == [F(1, 3)]
    assert sum(w for _, w in outcomes) == 1

@pytest.mark.parametrize('n', [3, 4, 5, 6])
def test_complete_graph_symmetry(n):
    outcomes = enumerate_deletion_step(GraphEnsemble.singleton(Graph.complete(n)), DeletionRule.UNIFORM)

    average = average_degree_distribution(outcomes)
    assert average[n - 2] == 1

def test_single_node_member_rejected():
    with pytest.raises(ValidationError):
        enumerate_deletion_step(GraphEnsemble.singleton(Graph.empty(1)), DeletionRule.UNIFORM)

def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        enumerate_deletion_step(GraphEnsemble.singleton(SAMPLE), DeletionRule.UNIFORM, cap=3)

def test_workers_do_not_change_result():
    e = enumerate_deletion_step(GraphEnsemble.singleton(Graph.complete(5)), DeletionRule.UNIFORM)

    serial = enumerate_deletion_step(e, DeletionRule.UNIFORM)
    parallel = enumerate_deletion_step(e, DeletionRule.UNIFORM, workers=2)

    assert parallel.members == serial.members

@settings(max_examples=50, deadline=None)
@given(graphs(min_nodes=2, max_nodes=6))
def test_enumeration_preserves_weight(g):
    for rule in DeletionRule:
        outcomes = enumerate_deletion_step(GraphEnsemble.singleton(g), rule)
        assert sum(w for _, w in outcomes) == 1
# endregion


# region State distribution
def test_sample_state_distribution():
    sd = state_distribution_of(GraphEnsemble.singleton(SAMPLE))

    assert sd.to_mapping() == {(4, 1): F(1, 4), (4, 2): F(1, 2), (4, 3): F(1, 4)}

def test_two_member_state_distribution():
    e = GraphEnsemble(((Graph.complete(3), F(1, 2)), (Graph.empty(2), F(1, 2))), Arithmetic.EXACT)

    sd = state_distribution_of(e)

    assert sd.to_mapping() == {(2, 0): F(1, 2), (3, 2): F(1, 2)}

def test_single_member_average_is_its_distribution():
    assert average_degree_distribution(GraphEnsemble.singleton(SAMPLE)) == degree_distribution(SAMPLE)
# endregion
