'''Steady-state degree distribution by forward iteration of the state-level kernel.'''

from .rule import EvolutionRule
from .state import StateDistribution
from .step import step_state_distribution
from ..arithmetic import Arithmetic, Number
from ..errors import ValidationError
from ..graph import DegreeDistribution

from dataclasses import dataclass, field
import json
import logging

import numpy as np

logger = logging.getLogger(__name__)

EXACT_SIZE_LIMIT = 12
'''Largest n_cap for which the solver accepts exact arithmetic.'''


@dataclass
class SolverDiagnostics:
    '''Outcome of a steady-state solve.'''

    iterations: int
    residual: float
    '''L1 change of the degree marginal over the last step.'''

    converged: bool
    tol: float
    max_iters: int

    leakage: float = 0.0
    '''Mass reflected at n_cap by the last step.'''

    max_leakage: float = 0.0
    '''Largest per-step reflected mass seen during the run.'''

    state: StateDistribution | None = field(default=None, repr=False)
    '''Final state distribution.'''

    def size_distribution(self) -> dict[int, float]:
        if self.state is None:
            return {}
        return {n: float(mass) for n, mass in self.state.size_distribution().items()}

    def to_dict(self) -> dict:
        '''Converts the SolverDiagnostics to a dictionary.'''
        return {
            'iterations': self.iterations,
            'residual': self.residual,
            'converged': self.converged,
            'tol': self.tol,
            'max_iters': self.max_iters,
            'leakage': self.leakage,
            'max_leakage': self.max_leakage,
            'sizes': {str(n): mass for n, mass in self.size_distribution().items()},
        }

    def to_json(self, *, indent: int | None = 2) -> str:
        '''Converts the SolverDiagnostics to a JSON string.'''
        return json.dumps(self.to_dict(), indent=indent)


def _l1(a: DegreeDistribution, b: DegreeDistribution) -> float:
    size = max(len(a), len(b))
    return float(np.abs(np.array(a.as_float().padded(size).probs) - np.array(b.as_float().padded(size).probs)).sum())


def steady_state(rule: EvolutionRule,
                 init: StateDistribution | None = None,
                 *,
                 tol: float = 1e-10,
                 max_iters: int = 100_000,
                 arithmetic: Arithmetic = Arithmetic.FLOAT,
                 max_leak: Number | None = None) -> tuple[DegreeDistribution, SolverDiagnostics]:
    '''
        Iterates `step_state_distribution` until the L1 change of the degree marginal drops below `tol`.

        The default initial distribution is the complete graph on `rule.n_floor` nodes. When
        `init` is given its arithmetic wins over `arithmetic`. Reaching `max_iters` is not an
        error: the returned diagnostics carry `converged=False`.
    '''

    if init is None:
        init = StateDistribution.complete_graph(rule.n_floor, arithmetic, n_max=rule.n_cap)
    arithmetic = init.arithmetic

    if arithmetic == Arithmetic.EXACT and rule.n_cap > EXACT_SIZE_LIMIT:
        raise ValidationError('n_cap', f'exact arithmetic is limited to n_cap <= {EXACT_SIZE_LIMIT}, found {rule.n_cap}')
    if tol <= 0:
        raise ValidationError('tol', f'tolerance must be positive, found {tol}')
    if max_iters < 1:
        raise ValidationError('max_iters', f'at least one iteration is required, found {max_iters}')

    sd = init if init.n_max >= rule.n_cap else init.resized(rule.n_cap)
    marginal = sd.degree_marginal()

    residual = float('inf')
    max_leakage = 0.0
    iterations = 0
    converged = False

    while iterations < max_iters:
        sd = step_state_distribution(sd, rule, max_leak=max_leak)
        iterations += 1
        max_leakage = max(max_leakage, float(sd.leaked))

        new_marginal = sd.degree_marginal()
        residual = _l1(marginal, new_marginal)
        marginal = new_marginal

        if iterations % 1000 == 0:
            logger.debug('Iteration %d: residual %.3e', iterations, residual)
        if residual < tol:
            converged = True
            break

    diagnostics = SolverDiagnostics(
        iterations=iterations,
        residual=residual,
        converged=converged,
        tol=tol,
        max_iters=max_iters,
        leakage=float(sd.leaked),
        max_leakage=max_leakage,
        state=sd,
    )

    if not converged:
        logger.warning('Steady state not reached after %d iterations (residual %.3e > tol %.1e)', iterations, residual, tol)
    if diagnostics.leakage > 0:
        logger.warning('%.3g of the mass is held at n_cap = %d; the tail is truncated', diagnostics.leakage, rule.n_cap)

    return marginal, diagnostics
