from .config import RunConfig
from .output import OutputFormat, Provenance, write_result, write_report
from .. import __version__
from ..arithmetic import Arithmetic
from ..ensemble import GraphEnsemble, MergePolicy, enumerate_deletion_step, average_degree_distribution
from ..errors import ValidationError
from ..graph import Graph, DeletionRule, format_edge_list, load_edge_list
from ..kernel import steady_state
from ..simulation import empirical_degree_distribution
from ..verify import verify_theorem1, verify_theorem2, compare_methods, reference, DEFAULT_THRESHOLD

from dataclasses import dataclass
from enum import IntEnum
import logging

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    SUCCESS = 0
    VALIDATION = 1
    NUMERICAL = 2
    '''Non-convergence or cap leakage beyond the allowed maximum.'''

    VERIFICATION = 3


@dataclass(frozen=True)
class CommandOptions:
    '''Flags shared by all subcommands.'''

    mode: Arithmetic | None = None
    workers: int = 1
    out: str = '.'
    fmt: OutputFormat = OutputFormat.CSV
    merge: MergePolicy = MergePolicy.LABELS

    def arithmetic(self, default: Arithmetic) -> Arithmetic:
        return self.mode if self.mode is not None else default


def _deletion_rule(config: RunConfig, default: DeletionRule) -> DeletionRule:
    value = config.model.get('delete', default)
    try:
        return DeletionRule(value)
    except ValueError as e:
        raise ValidationError('model.delete', f'expected one of {[r.value for r in DeletionRule]}, found {value!r}', config.lines.get('model.delete')) from e


def _load_graph(path: str) -> Graph:
    try:
        return load_edge_list(path)
    except OSError as e:
        raise ValidationError('graph', f'cannot read {path}: {e.strerror}') from e


# region Commands
def cmd_solve(config: RunConfig, options: CommandOptions) -> ExitCode:
    '''Solves the steady state and writes the degree distribution and the diagnostics.'''

    arithmetic = options.arithmetic(Arithmetic.FLOAT)
    rule = config.rule(arithmetic)
    distribution, diagnostics = steady_state(rule, arithmetic=arithmetic, **config.solver_options())

    provenance = Provenance('solve', __version__, config.digest('solve', mode=arithmetic.value), arithmetic)
    rows = [[k, arithmetic.format(p)] for k, p in enumerate(distribution)]
    write_result(options.out, 'steady_state', options.fmt, provenance, ['k', 'P_k'], rows, {'diagnostics': diagnostics.to_dict()})
    write_report(options.out, 'diagnostics', provenance, diagnostics.to_dict())

    print(f'solve: {diagnostics.iterations} iterations, residual {diagnostics.residual:.3e}, '
          f'{"converged" if diagnostics.converged else "NOT converged"}, leakage {diagnostics.leakage:.3g}')
    return ExitCode.SUCCESS if diagnostics.converged else ExitCode.NUMERICAL


def cmd_simulate(config: RunConfig, options: CommandOptions) -> ExitCode:
    '''Runs the Monte Carlo simulation and writes the empirical distribution with standard errors.'''

    cfg = config.sim_config()
    result = empirical_degree_distribution(cfg, workers=options.workers)

    provenance = Provenance('simulate', __version__, config.digest('simulate'), Arithmetic.FLOAT)
    fmt = Arithmetic.FLOAT.format
    rows = [[k, fmt(p), fmt(se)] for k, (p, se) in enumerate(zip(result.distribution, result.standard_errors))]
    write_result(options.out, 'empirical', options.fmt, provenance, ['k', 'P_k', 'standard_error'], rows,
                 {'trials': result.trials, 'samples': result.samples})

    print(f'simulate: {result.trials} trials, {result.samples} samples')
    return ExitCode.SUCCESS


def cmd_enumerate(config: RunConfig, options: CommandOptions, graph_path: str) -> ExitCode:
    '''Enumerates every single deletion from a graph and writes the outcome ensemble and its average.'''

    arithmetic = options.arithmetic(Arithmetic.EXACT)
    rule = _deletion_rule(config, DeletionRule.UNIFORM)
    graph = _load_graph(graph_path)

    outcomes = enumerate_deletion_step(GraphEnsemble.singleton(graph, arithmetic), rule, workers=options.workers, merge=options.merge)
    average = average_degree_distribution(outcomes, length=graph.n)

    digest = config.digest('enumerate', graph=format_edge_list(graph), delete=rule.value, merge=options.merge.value, mode=arithmetic.value)
    provenance = Provenance('enumerate', __version__, digest, arithmetic)
    write_report(options.out, 'ensemble', provenance, outcomes.to_dict())
    rows = [[k, arithmetic.format(p)] for k, p in enumerate(average)]
    write_result(options.out, 'average', options.fmt, provenance, ['k', 'P_k'], rows)

    print(f'enumerate: {len(outcomes)} outcomes with weights {", ".join(arithmetic.format(w) for _, w in outcomes)}')
    return ExitCode.SUCCESS


def cmd_verify_theorem1(config: RunConfig, options: CommandOptions, graph_path: str | None) -> ExitCode:
    '''Enumeration against kernel after one deletion. Defaults to the four-node worked example under degree-proportional deletion.'''

    arithmetic = options.arithmetic(Arithmetic.EXACT)
    rule = _deletion_rule(config, reference.SAMPLE_RULE)
    graph = _load_graph(graph_path) if graph_path is not None else reference.SAMPLE_GRAPH

    report = verify_theorem1(graph, rule, arithmetic, merge=options.merge)

    digest = config.digest('verify theorem1', graph=format_edge_list(graph), delete=rule.value, mode=arithmetic.value)
    write_report(options.out, 'theorem1', Provenance('verify theorem1', __version__, digest, arithmetic), report.to_dict())

    fmt = arithmetic.format
    print(f'theorem1: enumerated ({", ".join(fmt(p) for p in report.enumerated)}) '
          f'predicted ({", ".join(fmt(p) for p in report.predicted)}): {"pass" if report.passed else "FAIL"}')
    for note in report.notes:
        print(f'note: {note}')
    return ExitCode.SUCCESS if report.passed else ExitCode.VERIFICATION


def cmd_verify_theorem2(config: RunConfig, options: CommandOptions, n_max: int, symbolic_max: int) -> ExitCode:
    '''Uniform-deletion coefficients against their closed form, exactly.'''

    report = verify_theorem2(n_max, symbolic_max=symbolic_max)

    digest = config.digest('verify theorem2', n_max=n_max, symbolic_max=symbolic_max)
    write_report(options.out, 'theorem2', Provenance('verify theorem2', __version__, digest, Arithmetic.EXACT), report.to_dict())

    print(f'theorem2: {len(report.checks)} coefficient pairs up to n={n_max}, '
          f'{len(report.failures)} failures: {"pass" if report.passed else "FAIL"}')
    return ExitCode.SUCCESS if report.passed else ExitCode.VERIFICATION


def cmd_verify_compare(config: RunConfig, options: CommandOptions) -> ExitCode:
    '''Steady-state solver against simulation.'''

    rule = config.rule(Arithmetic.FLOAT)
    cfg = config.sim_config()
    threshold = config.threshold if config.threshold is not None else DEFAULT_THRESHOLD

    report = compare_methods(rule, cfg, threshold=threshold, workers=options.workers, **config.solver_options())

    digest = config.digest('verify compare')
    write_report(options.out, 'compare', Provenance('verify compare', __version__, digest, Arithmetic.FLOAT), report.to_dict())

    verdict = {True: 'pass', False: 'FAIL', None: 'informational'}[report.passed]
    print(f'compare: total variation {report.total_variation:.4f} (threshold {threshold}): {verdict}')
    for note in report.notes:
        print(f'note: {note}')
    if not report.diagnostics.converged:
        return ExitCode.NUMERICAL
    return ExitCode.VERIFICATION if report.passed is False else ExitCode.SUCCESS
# endregion
