from ..errors import ValidationError
from ..graph import Graph
from ..kernel import EvolutionRule

from dataclasses import dataclass


DEBUG_SNAPSHOT_LIMIT = 20
'''Graphs larger than this are never captured as debug snapshots.'''


@dataclass(frozen=True)
class SimConfig:
    '''Parameters of a Monte Carlo run of the evolving network.'''

    rule: EvolutionRule

    t_max: int
    '''Steps per trial.'''

    trials: int = 1
    seed: int = 0

    burn_in: int | None = None
    '''Steps discarded before sampling; the census of every step t in [burn_in, t_max] is sampled. Defaults to t_max // 2.'''

    initial: Graph | None = None
    '''Starting graph; the complete graph on n_floor nodes when omitted.'''

    debug: bool = False
    '''Capture graph snapshots while the network has at most 20 nodes.'''

    def __post_init__(self) -> None:
        if self.burn_in is None:
            object.__setattr__(self, 'burn_in', self.t_max // 2)

        if self.trials < 1:
            raise ValidationError('trials', f'at least one trial is required, found {self.trials}')
        if self.t_max < 0:
            raise ValidationError('t_max', f'step count must be non-negative, found {self.t_max}')
        if not 0 <= self.burn_in <= self.t_max:
            raise ValidationError('burn_in', f'burn-in must lie in [0, t_max = {self.t_max}], found {self.burn_in}')
        if self.seed < 0:
            raise ValidationError('seed', f'seed must be non-negative, found {self.seed}')

        if self.initial is not None:
            n = self.initial.n
            if not self.rule.n_floor <= n <= self.rule.n_cap:
                raise ValidationError('initial', f'initial graph has {n} nodes, outside [{self.rule.n_floor}, {self.rule.n_cap}]')

    @property
    def start(self) -> Graph:
        '''The graph every trial starts from.'''
        if self.initial is not None:
            return self.initial
        return Graph.complete(self.rule.n_floor)

    @property
    def sampled_steps(self) -> int:
        '''Number of censuses averaged per trial.'''
        return self.t_max - self.burn_in + 1

    @property
    def max_size(self) -> int:
        '''Largest size a trial can reach.'''
        return max(self.rule.n_cap, self.start.n)

    def to_dict(self) -> dict:
        '''Converts the SimConfig to a dictionary.'''
        return {
            'rule': self.rule.to_dict(),
            't_max': self.t_max,
            'trials': self.trials,
            'seed': self.seed,
            'burn_in': self.burn_in,
            'initial': self.initial.to_dict() if self.initial is not None else None,
            'debug': self.debug,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'SimConfig':
        '''Creates a SimConfig from a dictionary.'''
        initial = data.get('initial')
        return cls(
            rule=EvolutionRule.from_dict(data['rule']),
            t_max=int(data['t_max']),
            trials=int(data.get('trials', 1)),
            seed=int(data.get('seed', 0)),
            burn_in=data.get('burn_in'),
            initial=Graph.from_dict(initial) if initial is not None else None,
            debug=bool(data.get('debug', False)),
        )
