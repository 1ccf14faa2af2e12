'''A single trajectory of the evolving network, simulated directly on a concrete graph.'''

from .config import SimConfig, DEBUG_SNAPSHOT_LIMIT
from ..graph import Graph, DeletionRule
from ..kernel import AttachmentRule

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Iterator, NamedTuple

import networkx as nx
import numpy as np


class EventKind(StrEnum):
    GROW = 'grow'
    DELETE = 'delete'
    NOOP = 'noop'
    '''Growth at n_cap or decay at n_floor.'''


class Event(NamedTuple):
    t: int
    '''Step that produced the event, starting at 1.'''

    kind: EventKind
    node: str | None = None
    '''Added or deleted node.'''

    degree: int | None = None
    '''Degree of the deleted node just before deletion, or m for an added node.'''


@dataclass
class Trajectory:
    '''Per-step summaries of one trial. `censuses[t][k]` is the number of nodes with degree k after step t.'''

    trial_index: int
    censuses: list[np.ndarray] = field(default_factory=list)
    events: list[Event] = field(default_factory=list)
    snapshots: list[Graph] = field(default_factory=list)
    final: Graph | None = None

    @property
    def sizes(self) -> list[int]:
        return [int(census.sum()) for census in self.censuses]

    def degree_distribution(self, t: int) -> np.ndarray:
        '''Fraction of nodes with each degree after step t.'''
        census = self.censuses[t]
        return census / census.sum()


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    '''Independent stream per (seed, trial) pair, regardless of execution order.'''
    return np.random.default_rng([seed, trial_index])


def census(graph: nx.Graph) -> np.ndarray:
    '''Degree counts N_k for k = 0..n-1.'''
    degrees = [d for _, d in graph.degree()]
    return np.bincount(degrees, minlength=graph.number_of_nodes())


def _choose_targets(graph: nx.Graph, nodes: list, m: int, attach: AttachmentRule, rng: np.random.Generator) -> list:
    if m == 0:
        return []
    if attach == AttachmentRule.PREFERENTIAL:
        degrees = np.array([graph.degree(v) for v in nodes], dtype=np.float64)
        if np.count_nonzero(degrees) >= m:
            picks = rng.choice(len(nodes), size=m, replace=False, p=degrees / degrees.sum())
            return [nodes[i] for i in picks]
    picks = rng.choice(len(nodes), size=m, replace=False)
    return [nodes[i] for i in picks]


def _choose_victim(graph: nx.Graph, nodes: list, rule: DeletionRule, rng: np.random.Generator):
    if rule == DeletionRule.DEGREE_PROPORTIONAL and graph.number_of_edges() > 0:
        degrees = np.array([graph.degree(v) for v in nodes], dtype=np.float64)
        return nodes[rng.choice(len(nodes), p=degrees / degrees.sum())]
    return nodes[rng.integers(len(nodes))]


def evolve_graph(cfg: SimConfig, trial_index: int) -> Iterator[tuple[int, nx.Graph, Event | None]]:
    '''
        Yields (t, graph, event) for t = 0..t_max. The graph is mutated in place between yields.

        Each step grows with probability p, attaching m distinct targets, and deletes a node
        sampled from the deletion rule otherwise. Growth at n_cap and decay at n_floor are no-ops.
    '''

    rule = cfg.rule
    rng = trial_rng(cfg.seed, trial_index)
    p = float(rule.p)

    graph = cfg.start.to_networkx()
    next_label = graph.number_of_nodes() + 1

    yield 0, graph, None

    for t in range(1, cfg.t_max + 1):
        n = graph.number_of_nodes()
        grow = rng.random() < p

        if grow and n < rule.n_cap:
            nodes = list(graph.nodes)
            targets = _choose_targets(graph, nodes, rule.m, rule.attach, rng)
            while str(next_label) in graph:
                next_label += 1
            label = str(next_label)
            next_label += 1
            graph.add_node(label)
            graph.add_edges_from((label, target) for target in targets)
            event = Event(t, EventKind.GROW, label, len(targets))
        elif not grow and n > rule.n_floor:
            nodes = list(graph.nodes)
            victim = _choose_victim(graph, nodes, rule.delete, rng)
            event = Event(t, EventKind.DELETE, victim, graph.degree(victim))
            graph.remove_node(victim)
        else:
            event = Event(t, EventKind.NOOP)

        yield t, graph, event


def run_trial(cfg: SimConfig, trial_index: int) -> Trajectory:
    '''Runs one trial and records the degree census after every step. Deterministic given (cfg.seed, trial_index).'''

    trajectory = Trajectory(trial_index)
    graph = None
    for _, graph, event in evolve_graph(cfg, trial_index):
        trajectory.censuses.append(census(graph))
        if event is not None:
            trajectory.events.append(event)
        if cfg.debug and graph.number_of_nodes() <= DEBUG_SNAPSHOT_LIMIT:
            trajectory.snapshots.append(Graph.from_networkx(graph))

    trajectory.final = Graph.from_networkx(graph)
    return trajectory
