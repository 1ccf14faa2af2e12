'''One step of the state-level kernel applied to a whole state distribution.'''

from .rule import EvolutionRule
from .state import StateDistribution
from .survivors import survivor_profile
from .transitions import ReassignmentForm, decay_image, growth_image
from ..errors import CapLeakageError, ValidationError
from ..graph import DeletionRule

from typing import TYPE_CHECKING
import logging

if TYPE_CHECKING:
    from ..ensemble import GraphEnsemble

logger = logging.getLogger(__name__)


def decay_state_distribution(sd: StateDistribution,
                             rule: DeletionRule,
                             *,
                             ensemble: 'GraphEnsemble | None' = None,
                             form: ReassignmentForm = ReassignmentForm.SIMPLIFIED) -> StateDistribution:
    '''
        Applies exactly one deletion to every network in `sd`, with no size boundary.

        With `ensemble` given, degree-proportional deletion uses the exact node averages over
        its members; otherwise it uses the mean-field profile of `sd`.
    '''

    arithmetic = sd.arithmetic
    mass = arithmetic.zeros(sd.mass.shape)

    for n in sd.sizes:
        if n < 2:
            raise ValidationError('n', f'cannot delete a node from a network of {n} node')
        cond = sd.conditional(n)
        profile = survivor_profile(cond, n, rule, arithmetic, ensemble)
        mass[n - 1, :n - 1] += sd.size_mass(n) * decay_image(cond, profile, form)

    return StateDistribution(mass, arithmetic, t=sd.t + 1)


def step_state_distribution(sd: StateDistribution,
                            rule: EvolutionRule,
                            *,
                            ensemble: 'GraphEnsemble | None' = None,
                            max_leak: float | None = None) -> StateDistribution:
    '''
        Advances `sd` by one step: growth with probability p, decay with probability 1 - p.

        Decay at `rule.n_floor` and growth at `rule.n_cap` leave the network unchanged. The
        growth mass held back at the cap is recorded in the result's `leaked` field; a step
        leaking more than `max_leak` raises CapLeakageError.
    '''

    arithmetic = sd.arithmetic
    rule = rule.with_arithmetic(arithmetic)
    p, q = rule.p, rule.q

    if sd.n_max < rule.n_cap:
        sd = sd.resized(rule.n_cap)
    if sd.sizes and (sd.sizes[0] < rule.n_floor or sd.sizes[-1] > rule.n_cap):
        raise ValidationError('sd', f'occupied sizes {sd.sizes[0]}..{sd.sizes[-1]} fall outside [{rule.n_floor}, {rule.n_cap}]')

    mass = arithmetic.zeros(sd.mass.shape)
    leaked = arithmetic.number(0)

    for n in sd.sizes:
        row = sd.mass[n, :n]
        size_mass = sd.size_mass(n)
        cond = row / size_mass

        if p > 0:
            if n >= rule.n_cap:
                mass[n, :n] += p * row
                leaked += p * size_mass
            else:
                mass[n + 1, :n + 1] += p * size_mass * growth_image(cond, n, rule, arithmetic)

        if q > 0:
            if n <= rule.n_floor:
                mass[n, :n] += q * row
            else:
                profile = survivor_profile(cond, n, rule.delete, arithmetic, ensemble)
                mass[n - 1, :n - 1] += q * size_mass * decay_image(cond, profile)

    if max_leak is not None and leaked > max_leak:
        raise CapLeakageError(f'step {sd.t + 1} reflected {float(leaked):.3g} of the mass at n_cap = {rule.n_cap}; increase n_cap')

    return StateDistribution(mass, arithmetic, t=sd.t + 1, leaked=leaked)


def evolve(sd: StateDistribution,
           rule: EvolutionRule,
           steps: int,
           *,
           max_leak: float | None = None) -> StateDistribution:
    '''Applies `step_state_distribution` `steps` times.'''

    for _ in range(steps):
        sd = step_state_distribution(sd, rule, max_leak=max_leak)
    logger.debug('Evolved to t=%d, sizes %s', sd.t, sd.sizes)
    return sd
