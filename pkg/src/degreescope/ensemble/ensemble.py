from ..arithmetic import Arithmetic, Number, MASS_TOLERANCE
from ..errors import ValidationError
from ..graph import Graph, DegreeDistribution, degree_distribution
from ..kernel.state import StateDistribution

from collections import Counter
from dataclasses import dataclass
from typing import Iterator
import json


@dataclass(frozen=True)
class GraphEnsemble:
    '''A probability-weighted collection of graphs, i.e. the law of G(t) at one step.'''

    members: tuple[tuple[Graph, Number], ...]
    arithmetic: Arithmetic = Arithmetic.EXACT

    def __post_init__(self) -> None:
        members = tuple((graph, self.arithmetic.number(weight)) for graph, weight in self.members)
        object.__setattr__(self, 'members', members)

        if not members:
            raise ValidationError('members', 'an ensemble needs at least one member')
        if any(weight <= 0 for _, weight in members):
            raise ValidationError('members', 'member weights must be positive')

        total = sum(weight for _, weight in members)
        if not self.arithmetic.is_close(total, 1, MASS_TOLERANCE):
            raise ValidationError('members', f'member weights sum to {total}, not 1')

    @classmethod
    def singleton(cls, g: Graph, arithmetic: Arithmetic = Arithmetic.EXACT) -> 'GraphEnsemble':
        '''The ensemble holding `g` with probability 1.'''
        return cls(((g, arithmetic.number(1)),), arithmetic)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[tuple[Graph, Number]]:
        return iter(self.members)

    @property
    def max_size(self) -> int:
        '''N(t): the largest member size.'''
        return max(graph.n for graph, _ in self.members)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted({graph.n for graph, _ in self.members}))

    def members_of_size(self, n: int) -> list[tuple[Graph, Number]]:
        return [(graph, weight) for graph, weight in self.members if graph.n == n]

    def __repr__(self) -> str:
        members = '\n'.join(f'  {self.arithmetic.format(weight)}: {graph!r}' for graph, weight in self.members)
        return f'GraphEnsemble(\n{members}\n)'

    # region Serialization
    def to_dict(self) -> dict:
        '''Converts the GraphEnsemble to a dictionary.'''
        return {
            'version': 1,
            'arithmetic': self.arithmetic.value,
            'members': [
                {'weight': self.arithmetic.format(weight), **graph.to_dict()}
                for graph, weight in self.members
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'GraphEnsemble':
        '''Creates a GraphEnsemble from a dictionary.'''
        arithmetic = Arithmetic(data.get('arithmetic', Arithmetic.EXACT))
        members = tuple(
            (Graph.from_dict(member), arithmetic.parse(str(member['weight'])))
            for member in data['members']
        )
        return cls(members, arithmetic)

    def to_json(self, *, indent: int | None = 2) -> str:
        '''Converts the GraphEnsemble to a JSON string.'''
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, s: str) -> 'GraphEnsemble':
        '''Creates a GraphEnsemble from a JSON string.'''
        return cls.from_dict(json.loads(s))

    def save_json(self, path: str, *, indent: int | None = 2) -> None:
        '''Saves the GraphEnsemble to a JSON file.'''
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(), f, indent=indent)

    @classmethod
    def load_json(cls, path: str) -> 'GraphEnsemble':
        '''Loads a GraphEnsemble from a JSON file.'''
        with open(path, 'r', encoding='utf-8') as f:
            return cls.from_dict(json.load(f))
    # endregion


def average_degree_distribution(e: GraphEnsemble, length: int | None = None) -> DegreeDistribution:
    '''
        Returns P_k = sum_i P_i P{K_(G_i) = k}, the weight-convex mixture of member degree distributions.

        The result covers degrees 0..N-1 for the largest member size N, or `length` entries if given.
    '''

    size = length if length is not None else e.max_size
    zero = e.arithmetic.number(0)
    probs = [zero] * max(size, e.max_size)

    for graph, weight in e.members:
        for k, p in enumerate(degree_distribution(graph, e.arithmetic)):
            probs[k] += weight * p

    return DegreeDistribution(tuple(probs), e.arithmetic).padded(size)


def state_distribution_of(e: GraphEnsemble, n_max: int | None = None) -> StateDistribution:
    '''Returns P_(n,k) = sum over members of weight * (fraction of that member's nodes with degree k), at the member's size n.'''

    mapping: dict[tuple[int, int], Number] = {}
    for graph, weight in e.members:
        for k, count in Counter(graph.degrees()).items():
            state = (graph.n, k)
            mapping[state] = mapping.get(state, e.arithmetic.number(0)) + weight * e.arithmetic.ratio(count, graph.n)

    return StateDistribution.from_mapping(mapping, e.arithmetic, n_max=n_max)
