from ..arithmetic import Arithmetic, Number, MASS_TOLERANCE
from ..errors import ValidationError
from ..graph import DegreeDistribution

from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple

import numpy as np


class NodeState(NamedTuple):
    '''The state (n, k) of a node: size of the network it lives in and its degree.'''

    n: int
    k: int

    def is_valid(self) -> bool:
        return self.n >= 1 and 0 <= self.k < self.n


@dataclass(frozen=True, eq=False)
class StateDistribution:
    '''
        Probability mass P_(n,k)(t) over node states.

        Mass is stored densely in `mass[n, k]`; entries with k >= n are always zero.
    '''

    mass: np.ndarray
    arithmetic: Arithmetic = Arithmetic.FLOAT
    t: int = 0
    '''Step index.'''

    leaked: Number = 0
    '''Mass reflected at the size cap by the step that produced this distribution.'''

    _sizes: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        mass = np.array(self.mass, dtype=self.arithmetic.dtype)
        if self.arithmetic == Arithmetic.EXACT:
            mass = np.vectorize(self.arithmetic.number, otypes=[object])(mass) if mass.size else mass

        if mass.ndim != 2 or mass.shape[0] != mass.shape[1] + 1:
            raise ValidationError('mass', f'expected shape (n_max + 1, n_max), found {mass.shape}')
        if self.t < 0:
            raise ValidationError('t', 'step index must be non-negative')
        if np.any(mass < 0):
            raise ValidationError('mass', 'state masses must be non-negative')

        # row n may hold degrees 0..n-1 only
        invalid = np.arange(mass.shape[1])[None, :] >= np.arange(mass.shape[0])[:, None]
        if np.any(mass[invalid] != 0):
            raise ValidationError('mass', 'found mass at a state with k >= n')

        total = mass.sum()
        if not self.arithmetic.is_close(total, 1, MASS_TOLERANCE):
            raise ValidationError('mass', f'state masses sum to {total}, not 1')

        mass.setflags(write=False)
        object.__setattr__(self, 'mass', mass)
        object.__setattr__(self, 'leaked', self.arithmetic.number(self.leaked))
        object.__setattr__(self, '_sizes', tuple(int(n) for n in range(mass.shape[0]) if mass[n].sum() > 0))

    # region Constructors
    @classmethod
    def from_mapping(cls,
                     mapping: Mapping[tuple[int, int], Number],
                     arithmetic: Arithmetic = Arithmetic.FLOAT,
                     *,
                     n_max: int | None = None,
                     t: int = 0) -> 'StateDistribution':
        '''Builds a distribution from a {(n, k): mass} mapping.'''
        states = [NodeState(*state) for state in mapping]
        for state in states:
            if not state.is_valid():
                raise ValidationError('mass', f'invalid state {tuple(state)}')

        size = max([n_max or 1] + [state.n for state in states])
        mass = arithmetic.zeros((size + 1, size))
        for state, value in zip(states, mapping.values()):
            mass[state.n, state.k] += arithmetic.number(value)
        return cls(mass, arithmetic, t=t)

    @classmethod
    def concentrated(cls, state: tuple[int, int], arithmetic: Arithmetic = Arithmetic.FLOAT, *, n_max: int | None = None) -> 'StateDistribution':
        '''All mass at a single state.'''
        return cls.from_mapping({state: 1}, arithmetic, n_max=n_max)

    @classmethod
    def complete_graph(cls, n: int, arithmetic: Arithmetic = Arithmetic.FLOAT, *, n_max: int | None = None) -> 'StateDistribution':
        '''The state distribution of the complete graph on n nodes: all mass at (n, n-1).'''
        return cls.concentrated((n, n - 1), arithmetic, n_max=n_max)
    # endregion

    # region Queries
    @property
    def n_max(self) -> int:
        '''Largest size representable in `mass`.'''
        return self.mass.shape[1]

    @property
    def sizes(self) -> tuple[int, ...]:
        '''Sizes holding positive mass, ascending.'''
        return self._sizes

    def __getitem__(self, state: tuple[int, int]) -> Number:
        n, k = state
        if n >= self.mass.shape[0] or k >= self.mass.shape[1]:
            return self.arithmetic.number(0)
        return self.mass[n, k]

    def items(self) -> Iterator[tuple[NodeState, Number]]:
        '''Iterates over states with positive mass, ordered by (n, k).'''
        for n in self._sizes:
            for k in range(n):
                if self.mass[n, k] > 0:
                    yield NodeState(n, k), self.mass[n, k]

    def to_mapping(self) -> dict[NodeState, Number]:
        return dict(self.items())

    @property
    def total(self) -> Number:
        return self.mass.sum()

    def size_mass(self, n: int) -> Number:
        '''Total mass of nodes living in networks of size n.'''
        if n >= self.mass.shape[0]:
            return self.arithmetic.number(0)
        return self.mass[n].sum()

    def conditional(self, n: int) -> np.ndarray:
        '''Returns the degree distribution among nodes at size n: P_(n,k) / sum_j P_(n,j), for k = 0..n-1.'''
        size_mass = self.size_mass(n)
        if size_mass == 0:
            raise ValidationError('n', f'no mass at size {n}')
        return self.mass[n, :n] / size_mass

    def size_distribution(self) -> dict[int, Number]:
        '''Returns {n: mass at size n} for occupied sizes.'''
        return {n: self.size_mass(n) for n in self._sizes}

    def degree_marginal(self) -> DegreeDistribution:
        '''Returns P_k = sum_n P_(n,k) over degrees 0..n_max-1.'''
        return DegreeDistribution(tuple(self.mass.sum(axis=0)), self.arithmetic)

    def resized(self, n_max: int) -> 'StateDistribution':
        '''Returns the same distribution stored with room for sizes up to `n_max`.'''
        if n_max < max(self._sizes, default=1):
            raise ValidationError('n_max', f'cannot shrink below occupied size {max(self._sizes)}')
        mass = self.arithmetic.zeros((n_max + 1, n_max))
        rows = min(self.mass.shape[0], n_max + 1)
        cols = min(self.mass.shape[1], n_max)
        mass[:rows, :cols] = self.mass[:rows, :cols]
        return StateDistribution(mass, self.arithmetic, t=self.t, leaked=self.leaked)

    def l1_distance(self, other: 'StateDistribution') -> float:
        size = max(self.n_max, other.n_max)
        a = self.resized(size).mass.astype(np.float64)
        b = other.resized(size).mass.astype(np.float64)
        return float(np.abs(a - b).sum())
    # endregion

    def __repr__(self) -> str:
        entries = ', '.join(f'({s.n},{s.k}): {self.arithmetic.format(m)}' for s, m in self.items())
        return f'StateDistribution(t={self.t}, {{{entries}}})'

    # region Serialization
    def to_table(self) -> str:
        '''Writes "n k mass" lines for every state with positive mass.'''
        lines = ['# n k mass']
        lines.extend(f'{state.n} {state.k} {self.arithmetic.format(value)}' for state, value in self.items())
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_table(cls, text: str, arithmetic: Arithmetic = Arithmetic.FLOAT) -> 'StateDistribution':
        '''Reads the format written by `to_table`.'''
        mapping: dict[tuple[int, int], Number] = {}
        for line_no, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split('#', 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValidationError('state-table', f'expected "n k mass", found {raw_line.strip()!r}', line_no)
            try:
                state = (int(parts[0]), int(parts[1]))
                value = arithmetic.parse(parts[2])
            except ValueError as e:
                raise ValidationError('state-table', str(e), line_no) from e
            mapping[state] = mapping.get(state, 0) + value
        return cls.from_mapping(mapping, arithmetic)

    def to_dict(self) -> dict:
        '''Converts the StateDistribution to a dictionary.'''
        return {
            'arithmetic': self.arithmetic.value,
            't': self.t,
            'mass': [[state.n, state.k, self.arithmetic.format(value)] for state, value in self.items()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'StateDistribution':
        '''Creates a StateDistribution from a dictionary.'''
        arithmetic = Arithmetic(data.get('arithmetic', Arithmetic.FLOAT))
        mapping = {(int(n), int(k)): arithmetic.parse(str(value)) for n, k, value in data['mass']}
        return cls.from_mapping(mapping, arithmetic, t=int(data.get('t', 0)))
    # endregion
