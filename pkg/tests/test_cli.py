import json
import pytest

from degreescope import __version__
from degreescope.cli import main, parse_config, ExitCode, WORKERS_ENV
from degreescope.errors import ValidationError


def read_table(path):
    header, body = [], []
    for line in path.read_text().splitlines():
        (header if line.startswith('#') else body).append(line)
    return header, body


# region Configuration
@pytest.mark.parametrize('config, field', [
    ('datasets/configs/bad_p.yaml', 'model.p'),
    ('datasets/configs/bad_m.yaml', 'model.n_floor'),
    ('datasets/configs/unknown_key.yaml', 'model.gamma'),
])
def test_invalid_config(config, field, tmp_path, caplog):
    code = main(['solve', '--config', config, '--out', str(tmp_path)])

    assert code == ExitCode.VALIDATION
    assert field in caplog.text
    assert not (tmp_path / 'steady_state.csv').exists()

def test_line_numbers_reported():
    with open('datasets/configs/bad_p.yaml') as f:
        config = parse_config(f.read())

    assert config.lines['model.p'] == 2

def test_unknown_key_line():
    with pytest.raises(ValidationError) as exc:
        parse_config('model:\n  p: 0.5\n  gamma: 2\n')

    assert exc.value.field == 'model.gamma'
    assert exc.value.line == 3

def test_broken_yaml(tmp_path, caplog):
    code = main(['solve', '--config', 'datasets/configs/broken.yaml', '--out', str(tmp_path)])

    assert code == ExitCode.VALIDATION
    assert 'line' in caplog.text

def test_unknown_section():
    with pytest.raises(ValidationError) as exc:
        parse_config('model:\n  p: 0.5\nplot:\n  dpi: 300\n')

    assert exc.value.line == 3

@pytest.mark.parametrize('text, expected', [
    ('model:\n  p: 1/3\n', '1/3'),
    ('model:\n  p: 0.7\n', '7/10'),
    ('model:\n  p: 1\n', '1'),
])
def test_probabilities_kept_exact(text, expected):
    assert str(parse_config(text).model['p']) == expected

def test_override_wins_over_file(tmp_path):
    code = main(['solve', '--config', 'datasets/configs/bad_p.yaml', '--p', '0.5', '--n-cap', '10', '--out', str(tmp_path)])

    assert code == ExitCode.SUCCESS

def test_bad_override(tmp_path, caplog):
    code = main(['solve', '--p', 'half', '--out', str(tmp_path)])

    assert code == ExitCode.VALIDATION
    assert 'model.p' in caplog.text

@pytest.mark.parametrize('value', ['0', 'many'])
def test_workers_environment(value, tmp_path, monkeypatch, caplog):
    monkeypatch.setenv(WORKERS_ENV, value)

    code = main(['solve', '--p', '0.5', '--n-cap', '10', '--out', str(tmp_path)])

    assert code == ExitCode.VALIDATION
    assert WORKERS_ENV in caplog.text
# endregion


# region solve
def test_solve_writes_stamped_table(tmp_path, capsys):
    code = main(['solve', '--config', 'datasets/configs/solve.yaml', '--n-cap', '15', '--out', str(tmp_path)])

    assert code == ExitCode.SUCCESS
    header, body = read_table(tmp_path / 'steady_state.csv')
    assert header[0] == f'# degreescope {__version__}'
    assert header[1] == '# command: solve'
    assert header[2].startswith('# config sha256: ')
    assert header[3] == '# arithmetic: float'
    assert body[0] == 'k,P_k'
    assert len(body) == 1 + 15
    assert sum(float(row.split(',')[1]) for row in body[1:]) == pytest.approx(1)
    assert 'converged' in capsys.readouterr().out

    diagnostics = json.loads((tmp_path / 'diagnostics.json').read_text())
    assert diagnostics['converged'] is True
    assert diagnostics['provenance']['command'] == 'solve'

def test_solve_json(tmp_path):
    main(['solve', '--p', '0.5', '--n-cap', '10', '--format', 'json', '--out', str(tmp_path)])

    data = json.loads((tmp_path / 'steady_state.json').read_text())

    assert [row['k'] for row in data['rows']] == list(range(10))
    assert 'diagnostics' in data

def test_exact_solve_without_convergence(tmp_path):
    code = main(['solve', '--config', 'datasets/configs/exact_small.yaml', '--mode', 'exact', '--out', str(tmp_path)])

    assert code == ExitCode.NUMERICAL
    _, body = read_table(tmp_path / 'steady_state.csv')
    assert all('/' in row.split(',')[1] or row.split(',')[1] in ('0', '1') for row in body[1:])

def test_exact_solve_cap_limit(tmp_path):
    code = main(['solve', '--p', '1/2', '--n-cap', '30', '--mode', 'exact', '--out', str(tmp_path)])

    assert code == ExitCode.VALIDATION

def test_leakage_limit_exit_code(tmp_path):
    code = main(['solve', '--p', '0.9', '--n-cap', '5', '--max-leak', '0.01', '--out', str(tmp_path)])

    assert code == ExitCode.NUMERICAL

def test_degree_proportional_solve(tmp_path):
    code = main(['solve', '--config', 'datasets/configs/compare.yaml', '--delete', 'degree-proportional', '--out', str(tmp_path)])

    assert code == ExitCode.SUCCESS
    _, body = read_table(tmp_path / 'steady_state.csv')
    assert all(float(row.split(',')[1]) >= 0 for row in body[1:])
# endregion


# region simulate
def test_simulate_is_reproducible(tmp_path):
    args = ['simulate', '--config', 'datasets/configs/simulate.yaml', '--trials', '3', '--t-max', '60']

    assert main(args + ['--out', str(tmp_path / 'a')]) == ExitCode.SUCCESS
    assert main(args + ['--out', str(tmp_path / 'b'), '--workers', '2']) == ExitCode.SUCCESS

    first = (tmp_path / 'a' / 'empirical.csv').read_text()
    second = (tmp_path / 'b' / 'empirical.csv').read_text()
    assert first == second
    assert read_table(tmp_path / 'a' / 'empirical.csv')[1][0] == 'k,P_k,standard_error'

def test_simulate_rejects_zero_trials(tmp_path, caplog):
    code = main(['simulate', '--config', 'datasets/configs/simulate.yaml', '--trials', '0', '--out', str(tmp_path)])

    assert code == ExitCode.VALIDATION
    assert 'simulation.trials' in caplog.text

def test_simulate_from_initial_graph(tmp_path):
    code = main(['simulate', '--config', 'datasets/configs/sample_decay.yaml', '--trials', '200', '--out', str(tmp_path)])

    assert code == ExitCode.SUCCESS
    _, body = read_table(tmp_path / 'empirical.csv')
    # one deletion from four nodes leaves no node of degree 3
    assert float(body[4].split(',')[1]) == 0
# endregion


# region enumerate
def test_enumerate_sample(tmp_path, capsys):
    code = main(['enumerate', 'datasets/graphs/sample.edges', '--delete', 'degree-proportional', '--out', str(tmp_path)])

    assert code == ExitCode.SUCCESS
    assert 'weights 1/8, 3/8, 1/4, 1/4' in capsys.readouterr().out

    _, body = read_table(tmp_path / 'average.csv')
    assert body[1:] == ['0,1/8', '1,7/12', '2,7/24', '3,0']

    ensemble = json.loads((tmp_path / 'ensemble.json').read_text())
    assert ensemble['provenance']['arithmetic'] == 'exact'

@pytest.mark.parametrize('merge, outcomes', [
    ('labels', 3),
    ('isomorphism', 1),
])
def test_enumerate_merge(merge, outcomes, tmp_path, capsys):
    code = main(['enumerate', 'datasets/graphs/k3.edges', '--merge', merge, '--out', str(tmp_path)])

    assert code == ExitCode.SUCCESS
    assert f'enumerate: {outcomes} outcomes' in capsys.readouterr().out

def test_enumerate_missing_graph(tmp_path):
    assert main(['enumerate', 'datasets/graphs/missing.edges', '--out', str(tmp_path)]) == ExitCode.VALIDATION

def test_enumerate_malformed_graph(tmp_path, caplog):
    code = main(['enumerate', 'datasets/graphs/self_loop.edges', '--out', str(tmp_path)])

    assert code == ExitCode.VALIDATION
    assert 'line 2' in caplog.text
# endregion


# region verify
def test_verify_theorem1_default(tmp_path, capsys):
    code = main(['verify', 'theorem1', '--out', str(tmp_path)])

    out = capsys.readouterr().out
    assert code == ExitCode.SUCCESS
    assert 'pass' in out
    assert 'note: outcome without node 4' in out

    report = json.loads((tmp_path / 'theorem1.json').read_text())
    assert report['enumerated'] == ['1/8', '7/12', '7/24', '0']

def test_verify_theorem1_float(tmp_path):
    code = main(['verify', 'theorem1', '--graph', 'datasets/graphs/path3.edges', '--mode', 'float', '--out', str(tmp_path)])

    assert code == ExitCode.SUCCESS

def test_verify_theorem2(tmp_path, capsys):
    code = main(['verify', 'theorem2', '--n-max', '10', '--symbolic-max', '3', '--out', str(tmp_path)])

    assert code == ExitCode.SUCCESS
    assert f'{sum(n - 1 for n in range(2, 11))} coefficient pairs' in capsys.readouterr().out

    report = json.loads((tmp_path / 'theorem2.json').read_text())
    assert report['proofs'] == {'2': True, '3': True}

def test_verify_theorem2_small_n_max(tmp_path):
    assert main(['verify', 'theorem2', '--n-max', '2', '--out', str(tmp_path)]) == ExitCode.VALIDATION

def test_verify_compare_mismatch(tmp_path, caplog):
    code = main(['verify', 'compare', '--config', 'datasets/configs/mismatch.yaml', '--out', str(tmp_path)])

    assert code == ExitCode.VALIDATION
    assert 'rule' in caplog.text

def test_verify_compare_small(tmp_path):
    code = main(['verify', 'compare', '--config', 'datasets/configs/compare.yaml',
                 '--n-cap', '10', '--t-max', '200', '--burn-in', '20', '--trials', '2', '--threshold', '1',
                 '--out', str(tmp_path)])

    assert code == ExitCode.SUCCESS
    report = json.loads((tmp_path / 'compare.json').read_text())
    assert report['passed'] is True
    assert report['provenance']['command'] == 'verify compare'

def test_verify_compare_without_convergence(tmp_path):
    code = main(['verify', 'compare', '--config', 'datasets/configs/compare.yaml',
                 '--n-cap', '10', '--t-max', '50', '--burn-in', '10', '--trials', '2', '--max-iters', '2',
                 '--out', str(tmp_path)])

    assert code == ExitCode.NUMERICAL
    assert json.loads((tmp_path / 'compare.json').read_text())['passed'] is False
# endregion
