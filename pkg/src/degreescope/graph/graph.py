from ..errors import UnknownNodeError, ValidationError

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable
import json

import networkx as nx

Edge = tuple[str, str]
'''An undirected edge, stored with its endpoints in sorted order.'''


def normalize_edge(u: str, v: str) -> Edge:
    '''Returns the canonical (sorted) form of an undirected edge.'''
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    '''A small undirected simple graph. Node labels are opaque; only degrees carry meaning.'''

    node_labels: tuple[str, ...]
    '''Distinct node identifiers, in insertion order.'''

    edges: frozenset[Edge] = frozenset()
    '''Undirected edges, each stored as a sorted pair.'''

    _adjacency: dict[str, frozenset[str]] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.node_labels)
        if len(labels) < 1:
            raise ValidationError('node_labels', 'a graph needs at least one node')
        if len(set(labels)) != len(labels):
            raise ValidationError('node_labels', 'node labels must be distinct')

        known = set(labels)
        edges = set()
        for u, v in self.edges:
            u, v = str(u), str(v)
            if u == v:
                raise ValidationError('edges', f'self-loop on node {u!r}')
            if u not in known:
                raise UnknownNodeError(u)
            if v not in known:
                raise UnknownNodeError(v)
            edges.add(normalize_edge(u, v))

        neighbors: dict[str, set[str]] = {label: set() for label in labels}
        for u, v in edges:
            neighbors[u].add(v)
            neighbors[v].add(u)

        object.__setattr__(self, 'node_labels', labels)
        object.__setattr__(self, 'edges', frozenset(edges))
        object.__setattr__(self, '_adjacency', {label: frozenset(nbrs) for label, nbrs in neighbors.items()})

    # region Constructors
    @classmethod
    def from_edges(cls, edges: Iterable[tuple], nodes: Iterable = ()) -> 'Graph':
        '''Builds a graph from an edge iterable; extra `nodes` are added (first) as possibly isolated nodes.'''
        labels: list[str] = []
        seen: set[str] = set()

        def add(label) -> None:
            label = str(label)
            if label not in seen:
                seen.add(label)
                labels.append(label)

        for node in nodes:
            add(node)

        edge_list = [(str(u), str(v)) for u, v in edges]
        for u, v in edge_list:
            add(u)
            add(v)

        return cls(tuple(labels), frozenset(edge_list))

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        '''Returns the edgeless graph on nodes 1..n.'''
        return cls(tuple(str(i) for i in range(1, n + 1)))

    @classmethod
    def complete(cls, n: int) -> 'Graph':
        '''Returns the complete graph on nodes 1..n.'''
        labels = tuple(str(i) for i in range(1, n + 1))
        return cls(labels, frozenset(combinations(labels, 2)))

    @classmethod
    def path(cls, n: int) -> 'Graph':
        '''Returns the path 1-2-...-n.'''
        labels = tuple(str(i) for i in range(1, n + 1))
        return cls(labels, frozenset(zip(labels, labels[1:])))

    @classmethod
    def star(cls, n: int) -> 'Graph':
        '''Returns the star with hub 1 and leaves 2..n.'''
        labels = tuple(str(i) for i in range(1, n + 1))
        return cls(labels, frozenset((labels[0], leaf) for leaf in labels[1:]))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Graph':
        '''Converts a networkx graph, stringifying its node labels.'''
        return cls(tuple(str(v) for v in graph.nodes), frozenset((str(u), str(v)) for u, v in graph.edges))

    def to_networkx(self) -> nx.Graph:
        '''Converts to a networkx graph with the same labels.'''
        result = nx.Graph()
        result.add_nodes_from(self.node_labels)
        result.add_edges_from(sorted(self.edges))
        return result
    # endregion

    # region Properties
    @property
    def n(self) -> int:
        '''Number of nodes.'''
        return len(self.node_labels)

    @property
    def number_of_edges(self) -> int:
        return len(self.edges)

    @property
    def key(self) -> tuple[frozenset[str], frozenset[Edge]]:
        '''Identity used to merge ensemble members: label set and edge set.'''
        return frozenset(self.node_labels), self.edges

    def has_node(self, label: str) -> bool:
        return label in self._adjacency

    def neighbors(self, label: str) -> frozenset[str]:
        '''Returns the neighborhood of a node.'''
        if label not in self._adjacency:
            raise UnknownNodeError(label)
        return self._adjacency[label]

    def degree(self, label: str) -> int:
        return len(self.neighbors(label))

    def degrees(self) -> tuple[int, ...]:
        '''Returns node degrees aligned with `node_labels`.'''
        return tuple(len(self._adjacency[label]) for label in self.node_labels)

    @property
    def total_degree(self) -> int:
        '''Sum of all degrees, i.e. twice the number of edges.'''
        return 2 * len(self.edges)
    # endregion

    def delete_node(self, label: str) -> 'Graph':
        '''Returns a copy of the graph without `label` and its incident edges.'''
        if label not in self._adjacency:
            raise UnknownNodeError(label)

        labels = tuple(v for v in self.node_labels if v != label)
        edges = frozenset(e for e in self.edges if label not in e)
        return Graph(labels, edges)

    def __repr__(self) -> str:
        edges = ', '.join(f'{u}-{v}' for u, v in sorted(self.edges))
        return f'Graph(nodes={list(self.node_labels)}, edges=[{edges}])'

    # region Serialization
    def to_dict(self) -> dict:
        '''Converts the Graph to a dictionary.'''
        return {
            'nodes': list(self.node_labels),
            'edges': [list(edge) for edge in sorted(self.edges)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'Graph':
        '''Creates a Graph from a dictionary.'''
        return cls(tuple(data['nodes']), frozenset(tuple(edge) for edge in data.get('edges', [])))

    def to_json(self, *, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, s: str) -> 'Graph':
        return cls.from_dict(json.loads(s))
    # endregion
