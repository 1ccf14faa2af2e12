import logging
import pytest
from fractions import Fraction as F

from degreescope.arithmetic import Arithmetic
from degreescope.errors import CapLeakageError, ValidationError
from degreescope.graph import DeletionRule
from degreescope.kernel import *


def test_pure_decay_stays_at_floor():
    rule = EvolutionRule(p=0, n_floor=3, n_cap=10)

    distribution, diagnostics = steady_state(rule)

    assert diagnostics.converged
    assert diagnostics.iterations == 1
    assert distribution[2] == pytest.approx(1)

def test_pure_growth_fills_cap():
    rule = EvolutionRule(p=1, m=1, n_floor=2, n_cap=8)

    distribution, diagnostics = steady_state(rule)

    assert diagnostics.converged
    assert diagnostics.leakage == pytest.approx(1)
    assert diagnostics.size_distribution() == {8: pytest.approx(1)}
    # a tree on 8 nodes: mean degree 2 * 7 / 8
    assert float(distribution.mean) == pytest.approx(7 / 4)

def test_steady_state_is_fixed_point():
    rule = EvolutionRule(p=0.5, m=1, n_floor=2, n_cap=20)

    distribution, diagnostics = steady_state(rule, tol=1e-12)
    after = step_state_distribution(diagnostics.state, rule)

    assert diagnostics.converged
    assert distribution.total_variation(after.degree_marginal()) < 1e-10

def test_non_convergence_is_reported(caplog):
    rule = EvolutionRule(p=0.5, m=1, n_floor=2, n_cap=20)

    with caplog.at_level(logging.WARNING):
        _, diagnostics = steady_state(rule, max_iters=3)

    assert not diagnostics.converged
    assert diagnostics.iterations == 3
    assert 'not reached' in caplog.text

def test_exact_iterations_match_float():
    rule = EvolutionRule(p=F(1, 2), m=1, n_floor=2, n_cap=6)

    exact, exact_diagnostics = steady_state(rule, arithmetic=Arithmetic.EXACT, max_iters=6)
    approx, _ = steady_state(rule, arithmetic=Arithmetic.FLOAT, max_iters=6)

    assert exact_diagnostics.iterations == 6
    assert all(isinstance(p, F) for p in exact)
    assert sum(exact) == 1
    assert exact.max_abs_difference(approx) < 1e-12

def test_exact_mode_limited_to_small_caps():
    with pytest.raises(ValidationError) as exc:
        steady_state(EvolutionRule(p=F(1, 2), n_cap=30), arithmetic=Arithmetic.EXACT)

    assert exc.value.field == 'n_cap'

def test_leakage_limit():
    with pytest.raises(CapLeakageError):
        steady_state(EvolutionRule(p=0.9, m=1, n_floor=2, n_cap=5), max_leak=0.01)

@pytest.mark.parametrize('tol, max_iters, field', [
    (0, 10, 'tol'),
    (1e-10, 0, 'max_iters'),
])
def test_solver_options_validated(tol, max_iters, field):
    with pytest.raises(ValidationError) as exc:
        steady_state(EvolutionRule(p=0.5), tol=tol, max_iters=max_iters)

    assert exc.value.field == field

@pytest.mark.parametrize('n_cap', [25, 60])
def test_degree_proportional_mean_field_solves(n_cap):
    rule = EvolutionRule(p=0.7, m=2, delete=DeletionRule.DEGREE_PROPORTIONAL, n_floor=3, n_cap=n_cap)

    distribution, diagnostics = steady_state(rule, tol=1e-10)

    assert diagnostics.converged
    assert sum(distribution) == pytest.approx(1)
    assert all(p >= 0 for p in distribution)
    assert (diagnostics.state.mass >= 0).all()

def test_diagnostics_dict():
    _, diagnostics = steady_state(EvolutionRule(p=0.5, n_cap=10), max_iters=5)

    data = diagnostics.to_dict()

    assert set(data) == {'iterations', 'residual', 'converged', 'tol', 'max_iters', 'leakage', 'max_leakage', 'sizes'}
    assert data['iterations'] == 5
