'''Published values of the four-node worked example, used as regression anchors.'''

from ..graph import Graph, DeletionRule

from fractions import Fraction as F


SAMPLE_GRAPH = Graph.from_edges([('1', '2'), ('2', '3'), ('2', '4'), ('3', '4')])
'''Four nodes with degrees (1, 3, 2, 2).'''

SAMPLE_RULE = DeletionRule.DEGREE_PROPORTIONAL

SAMPLE_DELETION_PROBABILITIES = {'1': F(1, 8), '2': F(3, 8), '3': F(2, 8), '4': F(2, 8)}

SAMPLE_STATE_DISTRIBUTION = {(4, 1): F(1, 4), (4, 2): F(1, 2), (4, 3): F(1, 4)}

SAMPLE_TRANSITION_ROWS = {
    (4, 1): {(3, 0): F(75, 192), (3, 1): F(110, 192), (3, 2): F(7, 192)},
    (4, 2): {(3, 0): F(3, 96), (3, 1): F(74, 96), (3, 2): F(19, 96)},
    (4, 3): {(3, 0): F(3, 64), (3, 1): F(14, 64), (3, 2): F(47, 64)},
}
'''Decay rows of the sample graph's occupied states.'''

SAMPLE_REASSIGNMENT = (F(1, 8), F(7, 12), F(7, 24))

SAMPLE_AVERAGE = (F(1, 8), F(14, 24), F(7, 24), F(0))
'''Degree distribution one deletion after the sample graph.'''

PUBLISHED_OUTCOME_DISTRIBUTIONS = {
    '1': (F(0), F(0), F(1)),
    '2': (F(1, 3), F(2, 3), F(0)),
    '3': (F(0), F(2, 3), F(1, 3)),
    '4': (F(0), F(1, 3), F(2, 3)),
}
'''Per-outcome degree distributions as originally listed, keyed by the deleted node. The entry for node 4 disagrees with the topology.'''
