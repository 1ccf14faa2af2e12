'''Survivor transition probabilities of nodes that are not deleted, at node level and at state level.'''

from ..arithmetic import Arithmetic, Number
from ..errors import UnoccupiedStateError, ValidationError
from ..graph import Graph, DeletionRule, deletion_probabilities

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from ..ensemble import GraphEnsemble


def survivor_transitions(g: Graph, v: str, rule: DeletionRule, arithmetic: Arithmetic = Arithmetic.EXACT) -> tuple[Number, Number]:
    '''
        Returns (stay, lose_one) for node `v` when some other node is deleted.

        stay sums q_w over non-neighbors w != v (v keeps its degree); lose_one sums q_w over
        neighbors (v loses one edge). Together with q_v they sum to 1.
    '''

    if g.n < 2:
        raise ValidationError('g', 'survivor transitions need at least two nodes')

    q = deletion_probabilities(g, rule, arithmetic)
    neighbors = g.neighbors(v)

    zero = arithmetic.number(0)
    stay = sum((q_w for w, q_w in q.items() if w != v and w not in neighbors), zero)
    lose_one = sum((q[w] for w in neighbors), zero)
    return stay, lose_one


@dataclass
class _StateCensus:
    '''Weighted sums over all nodes of size-n members, grouped by degree.'''
    weight: list[Number]
    q: list[Number]
    stay: list[Number]
    lose: list[Number]


def _state_census(e: 'GraphEnsemble', n: int, rule: DeletionRule) -> _StateCensus:
    arithmetic = e.arithmetic
    zero = arithmetic.number(0)
    census = _StateCensus([zero] * n, [zero] * n, [zero] * n, [zero] * n)

    for graph, weight in e.members_of_size(n):
        q = deletion_probabilities(graph, rule, arithmetic)
        for label in graph.node_labels:
            neighbors = graph.neighbors(label)
            k = len(neighbors)
            stay = sum((q_w for w, q_w in q.items() if w != label and w not in neighbors), zero)
            lose = sum((q[w] for w in neighbors), zero)

            census.weight[k] += weight
            census.q[k] += weight * q[label]
            census.stay[k] += weight * stay
            census.lose[k] += weight * lose

    return census


def state_level_survivor_row(e: 'GraphEnsemble', s: tuple[int, int], rule: DeletionRule) -> tuple[Number, Number]:
    '''
        Returns (stay, lose_one) for state s = (n, k), averaged over every node in that state
        across the ensemble, each node weighted by its member's probability.
    '''

    n, k = s
    census = _state_census(e, n, rule)
    if k >= n or census.weight[k] == 0:
        raise UnoccupiedStateError(f'no node occupies state {tuple(s)}')

    return census.stay[k] / census.weight[k], census.lose[k] / census.weight[k]


@dataclass(frozen=True, eq=False)
class SurvivorProfile:
    '''
        State-level deletion and survivor probabilities for every degree at one size n.

        For each k: q[k] is the removal probability of a node in state (n, k), stay[k] the
        probability it keeps its degree, lose[k] the probability it loses one edge.
        Unoccupied degrees hold zeros.
    '''

    n: int
    q: np.ndarray
    stay: np.ndarray
    lose: np.ndarray
    arithmetic: Arithmetic = Arithmetic.EXACT

    def __post_init__(self) -> None:
        for name in ('q', 'stay', 'lose'):
            values = getattr(self, name)
            if len(values) != self.n:
                raise ValidationError(name, f'expected {self.n} entries, found {len(values)}')
        if self.n >= 1:
            assert self.stay[self.n - 1] == 0, f'A node adjacent to every other node cannot keep its degree. Offending profile: {self}'

    def row(self, k: int) -> tuple[Number, Number]:
        '''Returns (stay, lose_one) at degree k.'''
        return self.stay[k], self.lose[k]

    def is_occupied(self, k: int) -> bool:
        return self.q[k] + self.stay[k] + self.lose[k] > 0

    def __repr__(self) -> str:
        fmt = self.arithmetic.format
        rows = ', '.join(f'k={k}: (q={fmt(self.q[k])}, stay={fmt(self.stay[k])}, lose={fmt(self.lose[k])})' for k in range(self.n))
        return f'SurvivorProfile(n={self.n}, {rows})'

    # region Constructors
    @classmethod
    def uniform(cls, n: int, arithmetic: Arithmetic = Arithmetic.EXACT) -> 'SurvivorProfile':
        '''Uniform deletion: q = 1/n, stay = (n-k-1)/n, lose = k/n, whatever the topology.'''
        return cls(
            n,
            arithmetic.array(arithmetic.ratio(1, n) for _ in range(n)),
            arithmetic.array(arithmetic.ratio(n - k - 1, n) for k in range(n)),
            arithmetic.array(arithmetic.ratio(k, n) for k in range(n)),
            arithmetic,
        )

    @classmethod
    def from_ensemble(cls, e: 'GraphEnsemble', n: int, rule: DeletionRule) -> 'SurvivorProfile':
        '''Exact profile: node averages over the size-n members of `e`.'''
        census = _state_census(e, n, rule)
        if all(w == 0 for w in census.weight):
            raise UnoccupiedStateError(f'no ensemble member has size {n}')

        arithmetic = e.arithmetic
        zero = arithmetic.number(0)

        def average(values: list[Number]) -> np.ndarray:
            return arithmetic.array(v / w if w > 0 else zero for v, w in zip(values, census.weight))

        return cls(n, average(census.q), average(census.stay), average(census.lose), arithmetic)

    @classmethod
    def mean_field(cls, cond: np.ndarray, n: int, rule: DeletionRule, arithmetic: Arithmetic) -> 'SurvivorProfile':
        '''
            Profile derived from the degree distribution `cond` at size n alone.

            Degree-proportional deletion uses q = k/(n*kbar). Degrees whose q would exceed 1 are
            capped there and the excess is spread proportionally over the remaining degrees, so
            that sum_k cond[k] q[k] = 1/n still holds. A node's neighbors are drawn from the
            edge-end degree distribution, so lose = k * sum_j j cond[j] q[j] / kbar, capped at
            1 - q and equal to it at k = n-1. Without edges the uniform rule applies.
        '''

        if rule == DeletionRule.UNIFORM:
            return cls.uniform(n, arithmetic)

        degrees = range(n)
        mean_degree = sum(k * cond[k] for k in degrees)
        if mean_degree == 0:
            return cls.uniform(n, arithmetic)

        q = _capped_removal(cond, n, arithmetic)
        neighbor_removal = sum(j * cond[j] * q[j] for j in degrees) / mean_degree

        one = arithmetic.number(1)
        stay, lose = [], []
        for k in degrees:
            if k == n - 1:
                lose_k = one - q[k]
            else:
                lose_k = min(k * neighbor_removal, one - q[k])
            lose.append(lose_k)
            stay.append(one - q[k] - lose_k)

        return cls(n, arithmetic.array(q), arithmetic.array(stay), arithmetic.array(lose), arithmetic)
    # endregion


def _capped_removal(cond: np.ndarray, n: int, arithmetic: Arithmetic) -> list[Number]:
    '''
        Removal probabilities proportional to degree, each at most 1, with sum_k cond[k] q[k] = 1/n.

        Saturated degrees are fixed at 1 one at a time, largest first, and the scale of the rest
        is recomputed. Once every degree with edges is saturated, the remaining mass is shared
        evenly by the edgeless ones.
    '''

    one = arithmetic.number(1)
    zero = arithmetic.number(0)
    capped: set[int] = set()

    while True:
        target = arithmetic.ratio(1, n) - sum((cond[k] for k in capped), zero)
        free = [k for k in range(n) if k not in capped]
        weight = sum((k * cond[k] for k in free), zero)

        if weight == 0:
            # only edgeless or unoccupied degrees remain
            occupied = sum((cond[k] for k in free), zero)
            share = target / occupied if occupied > 0 else zero
            return [one if k in capped else (share if k == 0 else zero) for k in range(n)]

        scale = target / weight
        saturated = [k for k in free if k * scale > 1]
        if not saturated:
            return [one if k in capped else k * scale for k in range(n)]
        capped.add(max(saturated))


def survivor_profile(cond: np.ndarray,
                     n: int,
                     rule: DeletionRule,
                     arithmetic: Arithmetic,
                     ensemble: 'GraphEnsemble | None' = None) -> SurvivorProfile:
    '''Picks the profile for size n: uniform rule, exact ensemble averages, or the mean-field closure.'''

    if rule == DeletionRule.UNIFORM:
        return SurvivorProfile.uniform(n, arithmetic)
    if ensemble is not None:
        if ensemble.arithmetic != arithmetic:
            raise ValidationError('ensemble', f'ensemble uses {ensemble.arithmetic} arithmetic, state distribution uses {arithmetic}')
        return SurvivorProfile.from_ensemble(ensemble, n, rule)
    return SurvivorProfile.mean_field(cond, n, rule, arithmetic)
