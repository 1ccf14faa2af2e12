from ..arithmetic import Arithmetic, Number
from ..errors import ValidationError
from ..graph import DeletionRule

from dataclasses import dataclass, replace
from enum import StrEnum
from fractions import Fraction


class AttachmentRule(StrEnum):
    UNIFORM = 'uniform'
    PREFERENTIAL = 'preferential'


@dataclass(frozen=True)
class EvolutionRule:
    '''
        One step of the evolving network: with probability p a node joins and attaches to m
        distinct existing nodes; otherwise (probability q = 1 - p) a node is deleted.

        Sizes are kept within [n_floor, n_cap]: a deletion at n_floor and a growth at n_cap
        are both no-ops.
    '''

    p: Number
    '''Growth probability.'''

    m: int = 1
    '''Edges attached by a new node.'''

    attach: AttachmentRule = AttachmentRule.UNIFORM
    delete: DeletionRule = DeletionRule.UNIFORM

    n_floor: int = 2
    '''Smallest network size; decay is a no-op here.'''

    n_cap: int = 60
    '''Largest network size; growth is a no-op here.'''

    def __post_init__(self) -> None:
        p = self.p if isinstance(self.p, Fraction) else float(self.p)
        object.__setattr__(self, 'p', p)
        try:
            object.__setattr__(self, 'attach', AttachmentRule(self.attach))
        except ValueError:
            raise ValidationError('attach', f'expected one of {[r.value for r in AttachmentRule]}, found {self.attach!r}')
        try:
            object.__setattr__(self, 'delete', DeletionRule(self.delete))
        except ValueError:
            raise ValidationError('delete', f'expected one of {[r.value for r in DeletionRule]}, found {self.delete!r}')

        if not 0 <= p <= 1:
            raise ValidationError('p', f'growth probability must lie in [0, 1], found {p}')
        if self.m < 0:
            raise ValidationError('m', f'attachment count must be non-negative, found {self.m}')
        if self.n_floor < max(2, self.m + 1):
            raise ValidationError('n_floor', f'minimal size must be at least max(2, m + 1) = {max(2, self.m + 1)}, found {self.n_floor}')
        if self.n_cap < self.n_floor:
            raise ValidationError('n_cap', f'size cap {self.n_cap} is below n_floor {self.n_floor}')

    @property
    def q(self) -> Number:
        '''Decay probability 1 - p.'''
        return 1 - self.p

    def with_arithmetic(self, arithmetic: Arithmetic) -> 'EvolutionRule':
        '''Returns the rule with p converted to the given backend.'''
        return replace(self, p=arithmetic.number(self.p))

    # region Serialization
    def to_dict(self) -> dict:
        '''Converts the EvolutionRule to a dictionary.'''
        return {
            'p': str(self.p) if isinstance(self.p, Fraction) else self.p,
            'm': self.m,
            'attach': self.attach.value,
            'delete': self.delete.value,
            'n_floor': self.n_floor,
            'n_cap': self.n_cap,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'EvolutionRule':
        '''Creates an EvolutionRule from a dictionary.'''
        p = data['p']
        return cls(
            p=Fraction(p) if isinstance(p, str) else p,
            m=int(data.get('m', 1)),
            attach=AttachmentRule(data.get('attach', AttachmentRule.UNIFORM)),
            delete=DeletionRule(data.get('delete', DeletionRule.UNIFORM)),
            n_floor=int(data.get('n_floor', 2)),
            n_cap=int(data.get('n_cap', 60)),
        )
    # endregion
