'''YAML run configuration with sections `model`, `solver` and `simulation`.'''

from ..arithmetic import Arithmetic
from ..errors import ValidationError
from ..graph import Graph, load_edge_list
from ..kernel import EvolutionRule
from ..simulation import SimConfig

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable
import hashlib
import json

import yaml


def _number(value: Any) -> Fraction:
    '''Decimals and `p/q` strings, kept exact.'''
    if isinstance(value, bool):
        raise ValueError(f'expected a number, found {value!r}')
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(str(value).strip())


def _integer(value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError(f'expected an integer, found {value!r}')
    if isinstance(value, int):
        return value
    text = str(value).strip()
    if not text.lstrip('-').isdigit():
        raise ValueError(f'expected an integer, found {value!r}')
    return int(text)


def _real(value: Any) -> float:
    return float(_number(value))


def _text(value: Any) -> str:
    if not isinstance(value, str):
        raise ValueError(f'expected a string, found {value!r}')
    return value


MODEL_KEYS: dict[str, Callable[[Any], Any]] = {
    'p': _number,
    'm': _integer,
    'attach': _text,
    'delete': _text,
    'n_floor': _integer,
    'n_cap': _integer,
}

SOLVER_KEYS: dict[str, Callable[[Any], Any]] = {
    'tol': _real,
    'max_iters': _integer,
    'max_leak': _real,
}

SIMULATION_KEYS: dict[str, Callable[[Any], Any]] = {
    't_max': _integer,
    'trials': _integer,
    'seed': _integer,
    'burn_in': _integer,
    'initial': _text,
    'threshold': _real,
    **MODEL_KEYS,
}

SECTIONS = {
    'model': MODEL_KEYS,
    'solver': SOLVER_KEYS,
    'simulation': SIMULATION_KEYS,
}

DEFAULT_SIMULATION = {'t_max': 1000, 'trials': 100, 'seed': 0}


@dataclass
class RunConfig:
    '''Effective configuration of one CLI run, after command-line overrides.'''

    model: dict[str, Any] = field(default_factory=dict)
    solver: dict[str, Any] = field(default_factory=dict)
    simulation: dict[str, Any] = field(default_factory=dict)

    lines: dict[str, int] = field(default_factory=dict)
    '''Source line of each `section.key` read from a file.'''

    def _field_error(self, section: str, error: ValidationError) -> ValidationError:
        name = f'{section}.{error.field}'
        return ValidationError(name, error.message, self.lines.get(name, error.line))

    # region Builders
    def _rule(self, values: dict[str, Any], arithmetic: Arithmetic, section: str) -> EvolutionRule:
        if 'p' not in values:
            raise ValidationError(f'{section}.p', 'growth probability is required')
        try:
            return EvolutionRule(
                p=arithmetic.number(values['p']),
                m=values.get('m', 1),
                attach=values.get('attach', 'uniform'),
                delete=values.get('delete', 'uniform'),
                n_floor=values.get('n_floor', 2),
                n_cap=values.get('n_cap', 60),
            )
        except ValidationError as e:
            raise self._field_error(section, e) from e

    def rule(self, arithmetic: Arithmetic = Arithmetic.FLOAT) -> EvolutionRule:
        '''The kernel's rule, from the `model` section.'''
        return self._rule(self.model, arithmetic, 'model')

    def simulation_rule(self) -> EvolutionRule:
        '''The simulator's rule: `model` with any model keys of the `simulation` section on top.'''
        values = {**self.model, **{k: v for k, v in self.simulation.items() if k in MODEL_KEYS}}
        section = 'simulation' if any(k in MODEL_KEYS for k in self.simulation) else 'model'
        return self._rule(values, Arithmetic.FLOAT, section)

    def initial_graph(self) -> Graph | None:
        path = self.simulation.get('initial')
        if path is None:
            return None
        try:
            return load_edge_list(path)
        except OSError as e:
            raise ValidationError('simulation.initial', f'cannot read {path}: {e.strerror}', self.lines.get('simulation.initial')) from e

    def sim_config(self) -> SimConfig:
        '''Monte Carlo parameters, with defaults for missing keys.'''
        values = {**DEFAULT_SIMULATION, **self.simulation}
        rule = self.simulation_rule()
        initial = self.initial_graph()
        try:
            return SimConfig(
                rule=rule,
                t_max=values['t_max'],
                trials=values['trials'],
                seed=values['seed'],
                burn_in=values.get('burn_in'),
                initial=initial,
            )
        except ValidationError as e:
            raise self._field_error('simulation', e) from e

    def solver_options(self) -> dict[str, Any]:
        '''Keyword arguments for `steady_state`.'''
        options = {'tol': 1e-10, 'max_iters': 100_000, 'max_leak': None, **self.solver}
        if options['tol'] <= 0:
            raise ValidationError('solver.tol', f'tolerance must be positive, found {options["tol"]}', self.lines.get('solver.tol'))
        if options['max_iters'] < 1:
            raise ValidationError('solver.max_iters', f'at least one iteration is required, found {options["max_iters"]}', self.lines.get('solver.max_iters'))
        return options

    @property
    def threshold(self) -> float | None:
        return self.simulation.get('threshold')
    # endregion

    def override(self, section: str, key: str, value: Any) -> None:
        '''Sets a value from the command line; it wins over the file.'''
        converter = SECTIONS[section][key]
        try:
            getattr(self, section)[key] = converter(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f'{section}.{key}', str(e)) from e
        self.lines.pop(f'{section}.{key}', None)

    def to_dict(self) -> dict:
        '''Converts the RunConfig to a dictionary. Fractions are written as `p/q` strings.'''
        def plain(values: dict[str, Any]) -> dict[str, Any]:
            return {k: str(v) if isinstance(v, Fraction) else v for k, v in sorted(values.items())}
        return {
            'model': plain(self.model),
            'solver': plain(self.solver),
            'simulation': plain(self.simulation),
        }

    def digest(self, command: str, **inputs: Any) -> str:
        '''sha256 of the command name, the effective configuration and any further inputs.'''
        payload = json.dumps({'command': command, **self.to_dict(), 'inputs': inputs}, sort_keys=True, default=str)
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()


def _key_lines(text: str) -> dict[str, int]:
    '''Maps `section.key` to the 1-based line where the key appears.'''
    root = yaml.compose(text)
    lines: dict[str, int] = {}
    if not isinstance(root, yaml.MappingNode):
        return lines

    for section_node, body in root.value:
        lines[str(section_node.value)] = section_node.start_mark.line + 1
        if isinstance(body, yaml.MappingNode):
            for key_node, _ in body.value:
                lines[f'{section_node.value}.{key_node.value}'] = key_node.start_mark.line + 1
    return lines


def parse_config(text: str) -> RunConfig:
    '''Parses and validates a YAML configuration document.'''

    try:
        data = yaml.safe_load(text)
        lines = _key_lines(text)
    except yaml.YAMLError as e:
        mark = getattr(e, 'problem_mark', None)
        raise ValidationError('config', getattr(e, 'problem', None) or str(e), mark.line + 1 if mark else None) from e

    config = RunConfig(lines=lines)
    if data is None:
        return config
    if not isinstance(data, dict):
        raise ValidationError('config', 'expected a mapping of sections', 1)

    for section, body in data.items():
        if section not in SECTIONS:
            raise ValidationError(str(section), f'unknown section; expected one of {sorted(SECTIONS)}', lines.get(str(section)))
        if body is None:
            continue
        if not isinstance(body, dict):
            raise ValidationError(section, 'expected a mapping of keys', lines.get(section))

        keys = SECTIONS[section]
        target = getattr(config, section)
        for key, value in body.items():
            name = f'{section}.{key}'
            if key not in keys:
                raise ValidationError(name, 'unknown key', lines.get(name))
            try:
                target[key] = keys[key](value)
            except (ValueError, ZeroDivisionError) as e:
                raise ValidationError(name, str(e), lines.get(name)) from e

    return config


def load_config(path: str) -> RunConfig:
    '''Reads a YAML configuration file.'''
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return parse_config(f.read())
    except OSError as e:
        raise ValidationError('config', f'cannot read {path}: {e.strerror}') from e
