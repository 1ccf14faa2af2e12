from .graph import Graph
from ..arithmetic import Arithmetic, Number

from dataclasses import dataclass
from enum import StrEnum


class DeletionRule(StrEnum):
    UNIFORM = 'uniform'
    DEGREE_PROPORTIONAL = 'degree-proportional'


@dataclass(frozen=True)
class DeletionProbabilities:
    '''Per-node removal probabilities q_v for one graph.'''

    probs: dict[str, Number]
    '''Maps each node label to its removal probability, in node order.'''

    rule: DeletionRule
    '''The rule that was requested.'''

    fallback: bool = False
    '''True if a degree-proportional rule fell back to uniform because the graph has no edges.'''

    def __getitem__(self, label: str) -> Number:
        return self.probs[label]

    def __iter__(self):
        return iter(self.probs)

    def __len__(self) -> int:
        return len(self.probs)

    def values(self) -> list[Number]:
        return list(self.probs.values())

    def items(self):
        return self.probs.items()


def deletion_probabilities(g: Graph, rule: DeletionRule, arithmetic: Arithmetic = Arithmetic.EXACT) -> DeletionProbabilities:
    '''
        Returns q_v for every node of `g`.

        Uniform assigns 1/n to every node. Degree-proportional assigns k_v / sum_w k_w;
        on an edgeless graph that ratio is 0/0 and the uniform rule is used instead,
        with `fallback` set on the result.
    '''

    total = g.total_degree
    if rule == DeletionRule.DEGREE_PROPORTIONAL and total > 0:
        probs = {label: arithmetic.ratio(degree, total) for label, degree in zip(g.node_labels, g.degrees())}
        return DeletionProbabilities(probs, rule)

    uniform = arithmetic.ratio(1, g.n)
    return DeletionProbabilities(
        {label: uniform for label in g.node_labels},
        rule,
        fallback=(rule == DeletionRule.DEGREE_PROPORTIONAL),
    )


def delete_node(g: Graph, label: str) -> Graph:
    '''Returns `g` without `label` and its incident edges; `g` is left untouched.'''
    return g.delete_node(label)
