'''Symbolic proof, for one size n, that the kernel's uniform-deletion update has the closed-form coefficients.'''

from fractions import Fraction

from z3 import (
    Real, RealVal,
    And, Or,
    Solver,
    Sum,
    unsat,
    ArithRef,
)


# ----------------------------------------------------------------------
#  Z3 terms
# ----------------------------------------------------------------------

def rational(value: Fraction | int) -> ArithRef:
    '''Exact z3 constant for a rational.'''
    value = Fraction(value)
    return RealVal(f'{value.numerator}/{value.denominator}')


def state_masses(n: int) -> list[ArithRef]:
    '''One non-negative real P_(n,j) per degree j = 0..n-1.'''
    return [Real(f'P_{n}_{j}') for j in range(n)]


def kernel_update(masses: list[ArithRef], n: int) -> list[ArithRef]:
    '''
        Mass arriving at (n-1, k) for k = 0..n-2 after one uniform deletion, written with the
        normalized reassignment so that no closed form is assumed.
    '''

    q = rational(Fraction(1, n))
    stay = [rational(Fraction(n - k - 1, n)) for k in range(n)]
    lose = [rational(Fraction(k, n)) for k in range(n)]

    removed = Sum([m * q for m in masses])
    survivors = Sum([m * (1 - q) for m in masses])

    def share(k: int, fraction: list[ArithRef]) -> ArithRef:
        moves = stay[k] + lose[k]
        return (1 - q) * masses[k] / survivors * fraction[k] / moves

    update = []
    for k in range(n - 1):
        reassigned = share(k, stay) + share(k + 1, lose)
        update.append(masses[k] * stay[k] + masses[k + 1] * lose[k + 1] + removed * reassigned)
    return update


def closed_form_update(masses: list[ArithRef], n: int) -> list[ArithRef]:
    '''P_(n,k) (n-k-1)/(n-1) + P_(n,k+1) (k+1)/(n-1).'''
    return [
        masses[k] * rational(Fraction(n - k - 1, n - 1)) + masses[k + 1] * rational(Fraction(k + 1, n - 1))
        for k in range(n - 1)
    ]


# ----------------------------------------------------------------------
#  Proof
# ----------------------------------------------------------------------

def prove_uniform_update(n: int) -> bool:
    '''
        True when z3 shows no non-negative mass vector at size n, with positive total, makes the
        two updates differ. False when a counterexample exists or the solver gives up.
    '''

    if n < 2:
        raise ValueError(f'A deletion needs at least two nodes, found n = {n}')

    masses = state_masses(n)
    kernel = kernel_update(masses, n)
    closed = closed_form_update(masses, n)

    solver = Solver()
    solver.add(And([m >= 0 for m in masses]))
    solver.add(Sum(masses) > 0)
    solver.add(Or([a != b for a, b in zip(kernel, closed)]))

    return solver.check() == unsat
