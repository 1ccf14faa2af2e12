'''
    Uniform deletion: the general kernel reduces to the closed-form size-and-degree update.

    Under uniform deletion the decay image of P_(n, .) at (n-1, k) must equal
    P_(n,k) (n-k-1)/(n-1) + P_(n,k+1) (k+1)/(n-1). Coefficients are read off by applying the
    kernel to unit state distributions; a uniform mixture confirms the update is linear.
'''

from .smt import prove_uniform_update
from ..arithmetic import Arithmetic
from ..errors import ValidationError
from ..kernel import ReassignmentForm, SurvivorProfile, decay_image, uniform_deletion_transitions

from dataclasses import dataclass, field
from fractions import Fraction
import json
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoefficientCheck:
    '''Coefficients of P_(n,k) and P_(n,k+1) in the mass arriving at (n-1, k), from both sides.'''

    n: int
    k: int
    kernel_same: Fraction
    kernel_lower: Fraction
    closed_same: Fraction
    closed_lower: Fraction

    stray: bool = False
    '''The kernel sent mass from some other degree to (n-1, k).'''

    @property
    def passed(self) -> bool:
        return not self.stray and self.kernel_same == self.closed_same and self.kernel_lower == self.closed_lower

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'k': self.k,
            'kernel': [str(self.kernel_same), str(self.kernel_lower)],
            'closed_form': [str(self.closed_same), str(self.closed_lower)],
            'passed': self.passed,
        }


@dataclass
class Theorem2Report:
    n_max: int
    form: ReassignmentForm
    checks: list[CoefficientCheck] = field(default_factory=list)
    mixture_failures: list[int] = field(default_factory=list)
    '''Sizes where the uniform mixture did not match the combined coefficients.'''

    proofs: dict[int, bool] = field(default_factory=dict)
    '''z3 outcome per size, when requested.'''

    @property
    def failures(self) -> list[CoefficientCheck]:
        return [check for check in self.checks if not check.passed]

    @property
    def passed(self) -> bool:
        return not self.failures and not self.mixture_failures and all(self.proofs.values())

    def to_dict(self) -> dict:
        '''Converts the Theorem2Report to a dictionary.'''
        return {
            'n_max': self.n_max,
            'form': self.form.value,
            'passed': self.passed,
            'checked': len(self.checks),
            'failures': [check.to_dict() for check in self.failures],
            'mixture_failures': list(self.mixture_failures),
            'proofs': {str(n): proved for n, proved in self.proofs.items()},
        }

    def to_json(self, *, indent: int | None = 2) -> str:
        '''Converts the Theorem2Report to a JSON string.'''
        return json.dumps(self.to_dict(), indent=indent)


def _unit(n: int, j: int):
    vector = Arithmetic.EXACT.zeros(n)
    vector[j] = Fraction(1)
    return vector


def check_size(n: int, form: ReassignmentForm = ReassignmentForm.GENERAL) -> tuple[list[CoefficientCheck], bool]:
    '''Coefficient checks for every k = 0..n-2 at size n, plus whether the uniform mixture matches.'''

    profile = SurvivorProfile.uniform(n, Arithmetic.EXACT)

    # images[j][k]: coefficient of P_(n,j) in the mass arriving at (n-1, k)
    images = [decay_image(_unit(n, j), profile, form) for j in range(n)]

    checks = []
    for k in range(n - 1):
        closed = uniform_deletion_transitions((n, k), Fraction(1))
        closed_lower = uniform_deletion_transitions((n, k + 1), Fraction(1))
        stray = any(images[j][k] != 0 for j in range(n) if j not in (k, k + 1))
        checks.append(CoefficientCheck(
            n=n,
            k=k,
            kernel_same=images[k][k],
            kernel_lower=images[k + 1][k],
            closed_same=closed[(n - 1, k)],
            closed_lower=closed_lower[(n - 1, k)],
            stray=stray,
        ))

    mixture = Arithmetic.EXACT.array(Fraction(1, n) for _ in range(n))
    mixed = decay_image(mixture, profile, form)
    combined = [sum(images[j][k] for j in range(n)) / n for k in range(n - 1)]
    mixture_ok = all(mixed[k] == combined[k] for k in range(n - 1))

    return checks, mixture_ok


def verify_theorem2(n_max: int, *, symbolic_max: int = 0, form: ReassignmentForm = ReassignmentForm.GENERAL) -> Theorem2Report:
    '''
        Checks every 2 <= n <= n_max and 0 <= k <= n-2 in exact arithmetic.

        Sizes up to `symbolic_max` are additionally proved for arbitrary mass vectors with z3.
    '''

    if n_max < 3:
        raise ValidationError('n_max', f'expected at least 3, found {n_max}')

    report = Theorem2Report(n_max, ReassignmentForm(form))
    for n in range(2, n_max + 1):
        checks, mixture_ok = check_size(n, form)
        report.checks.extend(checks)
        if not mixture_ok:
            report.mixture_failures.append(n)

    for n in range(2, min(symbolic_max, n_max) + 1):
        report.proofs[n] = prove_uniform_update(n)
        logger.debug('z3 proof at n=%d: %s', n, report.proofs[n])

    if not report.passed:
        logger.warning('Uniform-deletion identity failed for %d coefficient pairs', len(report.failures))
    return report
