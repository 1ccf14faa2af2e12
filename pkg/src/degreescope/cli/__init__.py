'''Command-line front end: `degreescope {solve, simulate, enumerate, verify}`.'''

from .commands import (
    ExitCode,
    CommandOptions,
    cmd_solve,
    cmd_simulate,
    cmd_enumerate,
    cmd_verify_theorem1,
    cmd_verify_theorem2,
    cmd_verify_compare,
)
from .config import RunConfig, SECTIONS, load_config, parse_config
from .output import OutputFormat
from ..arithmetic import Arithmetic
from ..ensemble import MergePolicy
from ..errors import (
    CapLeakageError,
    DegenerateReassignmentError,
    DegreeScopeError,
    UnknownNodeError,
    ValidationError,
)

import argparse
import logging
import os
import sys

logger = logging.getLogger(__name__)

WORKERS_ENV = 'ESPR_WORKERS'

# flag name -> (section, key)
OVERRIDES = {
    'p': ('model', 'p'),
    'm': ('model', 'm'),
    'attach': ('model', 'attach'),
    'delete': ('model', 'delete'),
    'n_floor': ('model', 'n_floor'),
    'n_cap': ('model', 'n_cap'),
    'tol': ('solver', 'tol'),
    'max_iters': ('solver', 'max_iters'),
    'max_leak': ('solver', 'max_leak'),
    't_max': ('simulation', 't_max'),
    'trials': ('simulation', 'trials'),
    'seed': ('simulation', 'seed'),
    'burn_in': ('simulation', 'burn_in'),
    'initial': ('simulation', 'initial'),
    'threshold': ('simulation', 'threshold'),
}


def _default_workers() -> int:
    value = os.environ.get(WORKERS_ENV, '1')
    try:
        workers = int(value)
    except ValueError:
        raise ValidationError(WORKERS_ENV, f'expected a positive integer, found {value!r}')
    if workers < 1:
        raise ValidationError(WORKERS_ENV, f'expected a positive integer, found {value!r}')
    return workers


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='YAML file with model, solver and simulation sections')
    common.add_argument('--mode', choices=[a.value for a in Arithmetic], help='arithmetic backend')
    common.add_argument('--workers', type=int, help=f'worker processes; defaults to ${WORKERS_ENV} or 1')
    common.add_argument('--out', default='.', help='output directory')
    common.add_argument('--format', dest='fmt', choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    common.add_argument('--merge', choices=[m.value for m in MergePolicy], default=MergePolicy.LABELS.value,
                        help='how enumeration merges outcomes')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true')
    verbosity.add_argument('-q', '--quiet', action='store_true')

    overrides = common.add_argument_group('configuration overrides')
    for name, (section, key) in OVERRIDES.items():
        overrides.add_argument(f'--{name.replace("_", "-")}', dest=f'override_{name}', metavar=key.upper(),
                               help=f'overrides {section}.{key}')

    parser = argparse.ArgumentParser(prog='degreescope', description='Degree distributions of evolving networks with node addition and deletion.')
    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser('solve', parents=[common], help='steady-state degree distribution of the state-level kernel')
    commands.add_parser('simulate', parents=[common], help='Monte Carlo estimate of the degree distribution')

    enumerate_parser = commands.add_parser('enumerate', parents=[common], help='all single-deletion outcomes of a graph')
    enumerate_parser.add_argument('graph', help='edge-list file')

    verify_parser = commands.add_parser('verify', help='checks of the kernel')
    checks = verify_parser.add_subparsers(dest='check', required=True)

    theorem1 = checks.add_parser('theorem1', parents=[common], help='enumeration against kernel after one deletion')
    theorem1.add_argument('--graph', help='edge-list file; defaults to the four-node worked example')

    theorem2 = checks.add_parser('theorem2', parents=[common], help='uniform-deletion coefficients against the closed form')
    theorem2.add_argument('--n-max', type=int, default=50)
    theorem2.add_argument('--symbolic-max', type=int, default=0, help='sizes also proved with z3')

    checks.add_parser('compare', parents=[common], help='steady-state solver against simulation')

    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)


def _run_config(args: argparse.Namespace) -> RunConfig:
    config = load_config(args.config) if args.config else RunConfig()
    for name, (section, key) in OVERRIDES.items():
        value = getattr(args, f'override_{name}')
        if value is not None:
            config.override(section, key, value)
    return config


def run(args: argparse.Namespace) -> ExitCode:
    '''Dispatches parsed arguments to a command.'''

    config = _run_config(args)
    workers = args.workers if args.workers is not None else _default_workers()
    if workers < 1:
        raise ValidationError('workers', f'expected a positive integer, found {workers}')

    options = CommandOptions(
        mode=Arithmetic(args.mode) if args.mode else None,
        workers=workers,
        out=args.out,
        fmt=OutputFormat(args.fmt),
        merge=MergePolicy(args.merge),
    )

    if args.command == 'solve':
        return cmd_solve(config, options)
    if args.command == 'simulate':
        return cmd_simulate(config, options)
    if args.command == 'enumerate':
        return cmd_enumerate(config, options, args.graph)

    if args.check == 'theorem1':
        return cmd_verify_theorem1(config, options, args.graph)
    if args.check == 'theorem2':
        return cmd_verify_theorem2(config, options, args.n_max, args.symbolic_max)
    return cmd_verify_compare(config, options)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args)

    try:
        return int(run(args))
    except (ValidationError, UnknownNodeError) as e:
        logger.error('%s', e)
        return int(ExitCode.VALIDATION)
    except (CapLeakageError, DegenerateReassignmentError) as e:
        logger.error('%s', e)
        return int(ExitCode.NUMERICAL)
    except DegreeScopeError as e:
        logger.error('%s', e)
        return int(ExitCode.VALIDATION)


if __name__ == '__main__':
    sys.exit(main())
