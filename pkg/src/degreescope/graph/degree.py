from .graph import Graph
from ..arithmetic import Arithmetic, Number, MASS_TOLERANCE
from ..errors import ValidationError

from dataclasses import dataclass
from collections import Counter
from typing import Iterator


@dataclass(frozen=True)
class DegreeDistribution:
    '''A probability vector over degrees k = 0..len-1.'''

    probs: tuple[Number, ...]
    arithmetic: Arithmetic = Arithmetic.FLOAT

    def __post_init__(self) -> None:
        probs = tuple(self.arithmetic.number(p) for p in self.probs)
        object.__setattr__(self, 'probs', probs)

        if len(probs) == 0:
            raise ValidationError('probs', 'a degree distribution needs at least one entry')
        if any(p < 0 for p in probs):
            raise ValidationError('probs', 'probabilities must be non-negative')
        if not self.arithmetic.is_close(sum(probs), 1, MASS_TOLERANCE):
            raise ValidationError('probs', f'probabilities sum to {sum(probs)}, not 1')

    def __len__(self) -> int:
        return len(self.probs)

    def __getitem__(self, k: int) -> Number:
        '''Probability of degree k; zero beyond the stored range.'''
        if k >= len(self.probs):
            return self.arithmetic.number(0)
        return self.probs[k]

    def __iter__(self) -> Iterator[Number]:
        return iter(self.probs)

    def padded(self, length: int) -> 'DegreeDistribution':
        '''Returns the distribution extended with zeros to `length` entries. Trailing zeros may also be dropped.'''
        if length < len(self.probs):
            if any(p != 0 for p in self.probs[length:]):
                raise ValidationError('length', f'cannot truncate non-zero mass beyond degree {length - 1}')
            return DegreeDistribution(self.probs[:length], self.arithmetic)
        zero = self.arithmetic.number(0)
        return DegreeDistribution(self.probs + (zero,) * (length - len(self.probs)), self.arithmetic)

    def max_abs_difference(self, other: 'DegreeDistribution') -> Number:
        length = max(len(self), len(other))
        return max(abs(self[k] - other[k]) for k in range(length))

    def total_variation(self, other: 'DegreeDistribution') -> float:
        '''Half the L1 distance, as a float.'''
        length = max(len(self), len(other))
        return 0.5 * sum(abs(float(self[k]) - float(other[k])) for k in range(length))

    @property
    def mean(self) -> Number:
        return sum(k * p for k, p in enumerate(self.probs))

    @property
    def mode(self) -> int:
        '''Smallest degree of maximal probability.'''
        best = max(self.probs)
        return self.probs.index(best)

    def as_float(self) -> 'DegreeDistribution':
        return DegreeDistribution(tuple(float(p) for p in self.probs), Arithmetic.FLOAT)

    def __repr__(self) -> str:
        return f'DegreeDistribution(({", ".join(self.arithmetic.format(p) for p in self.probs)}))'

    # region Serialization
    def to_dict(self) -> dict:
        '''Converts the DegreeDistribution to a dictionary.'''
        return {
            'arithmetic': self.arithmetic.value,
            'probs': [self.arithmetic.format(p) for p in self.probs],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'DegreeDistribution':
        '''Creates a DegreeDistribution from a dictionary.'''
        arithmetic = Arithmetic(data.get('arithmetic', Arithmetic.FLOAT))
        return cls(tuple(arithmetic.parse(str(p)) for p in data['probs']), arithmetic)
    # endregion


def degree_distribution(g: Graph, arithmetic: Arithmetic = Arithmetic.EXACT) -> DegreeDistribution:
    '''Returns P{K_G = k} = N_k / n over degrees 0..n-1.'''
    counts = Counter(g.degrees())
    return DegreeDistribution(tuple(arithmetic.ratio(counts.get(k, 0), g.n) for k in range(g.n)), arithmetic)
