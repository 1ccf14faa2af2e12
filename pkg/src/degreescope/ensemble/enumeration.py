'''Exhaustive one-step enumeration: the "evolving rule directly" ground truth.'''

from .ensemble import GraphEnsemble
from ..arithmetic import Arithmetic, Number
from ..errors import EnumerationCapError, ValidationError
from ..graph import Graph, DeletionRule, deletion_probabilities

from enum import StrEnum
from multiprocessing import Pool
import logging

import networkx as nx

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10**6
'''Default maximum number of members an enumeration may produce.'''


class MergePolicy(StrEnum):
    LABELS = 'labels'
    '''Merge outcomes with identical label sets and edge sets.'''

    ISOMORPHISM = 'isomorphism'
    '''Additionally merge isomorphic outcomes into the first one encountered.'''


def _expand_member(args: tuple[Graph, Number, DeletionRule, Arithmetic]) -> list[tuple[Graph, Number]]:
    '''Deletes each node of one member in turn, weighting the outcome by q_v.'''
    graph, weight, rule, arithmetic = args

    q = deletion_probabilities(graph, rule, arithmetic)
    return [
        (graph.delete_node(label), weight * q_v)
        for label, q_v in q.items()
        if q_v > 0
    ]


class _Merger:
    '''Accumulates weighted outcomes in first-seen order.'''

    def __init__(self, policy: MergePolicy, cap: int) -> None:
        self.policy = policy
        self.cap = cap
        self.graphs: list[Graph] = []
        self.weights: list[Number] = []
        self._by_key: dict = {}
        self._by_hash: dict[str, list[int]] = {}
        self._nx_cache: dict[int, nx.Graph] = {}

    def _find_isomorphic(self, graph: Graph) -> int | None:
        candidate = graph.to_networkx()
        bucket = self._by_hash.setdefault(nx.weisfeiler_lehman_graph_hash(candidate), [])
        for idx in bucket:
            if nx.is_isomorphic(self._nx_cache[idx], candidate):
                return idx
        bucket.append(len(self.graphs))
        self._nx_cache[len(self.graphs)] = candidate
        return None

    def add(self, graph: Graph, weight: Number) -> None:
        idx = self._by_key.get(graph.key)
        if idx is None and self.policy == MergePolicy.ISOMORPHISM:
            idx = self._find_isomorphic(graph)
            if idx is not None:
                self._by_key[graph.key] = idx

        if idx is not None:
            self.weights[idx] += weight
            return

        if len(self.graphs) >= self.cap:
            raise EnumerationCapError(f'enumeration exceeds the cap of {self.cap} members')

        self._by_key[graph.key] = len(self.graphs)
        self.graphs.append(graph)
        self.weights.append(weight)


def enumerate_deletion_step(e: GraphEnsemble,
                            rule: DeletionRule,
                            *,
                            cap: int = DEFAULT_CAP,
                            workers: int = 1,
                            merge: MergePolicy = MergePolicy.LABELS) -> GraphEnsemble:
    '''
        Applies one node deletion to every member of `e` in every possible way.

        Each member (g, w) and node v yields (g - v, w * q_v). Outcomes are merged by
        summing weights; the merge order follows member order then node order, so the
        result does not depend on `workers`.
    '''

    for graph, _ in e.members:
        if graph.n < 2:
            raise ValidationError('members', f'cannot delete a node from a graph with {graph.n} node')

    tasks = [(graph, weight, rule, e.arithmetic) for graph, weight in e.members]
    if workers > 1 and len(tasks) > 1:
        with Pool(workers) as pool:
            expansions = pool.map(_expand_member, tasks)
    else:
        expansions = [_expand_member(task) for task in tasks]

    merger = _Merger(MergePolicy(merge), cap)
    for outcomes in expansions:
        for graph, weight in outcomes:
            merger.add(graph, weight)

    logger.debug('Enumerated %d members into %d outcomes', len(e.members), len(merger.graphs))
    return GraphEnsemble(tuple(zip(merger.graphs, merger.weights)), e.arithmetic)
