#!/usr/bin/env python3
"""
Тесты командной строки: артефакты, коды выхода, детерминированность
"""
import json

import pytest

from modules.cli import COMMANDS, build_parser, load_json, main
from modules.errors import MalformedInput

CONSTANT_ONE = json.dumps([{"arity": 1, "table": [1, 1, 1]}])


def run(tmp_path, *argv, name='out.json'):
    out = tmp_path / name
    code = main(list(argv) + ['--out', str(out)])
    payload = json.loads(out.read_text(encoding='utf-8')) if out.exists() else None
    return code, payload


def test_every_command_is_registered():
    parser = build_parser()
    subparsers = parser._subparsers._group_actions[0].choices
    assert set(subparsers) == set(COMMANDS)


def test_bound(tmp_path):
    code, payload = run(tmp_path, 'bound', '--K', '3', '--F', '2')
    assert code == 0
    assert payload["bound"] == 15


def test_bound_with_exact_count(tmp_path):
    code, payload = run(tmp_path, 'bound', '--K', '3', '--F', '[2, 5]', '--exact')
    assert code == 0
    assert payload["count"] <= payload["bound"]


def test_closure_of_constants(tmp_path):
    code, payload = run(tmp_path, 'closure', '--K', '3', '--F', '2', '--generators', CONSTANT_ONE)
    assert code == 0
    assert payload["ranks"] == [1]
    assert payload["slice"]["parts"][0]["basis"] == [[1, 1, 1]]


def test_closure_of_nothing(tmp_path):
    code, payload = run(tmp_path, 'closure', '--K', '3', '--F', '2', '--generators', '[]', '--arity', '2')
    assert code == 0
    assert payload["ranks"] == [0]


def test_generators_from_file(tmp_path):
    path = tmp_path / 'gens.json'
    path.write_text(json.dumps({"generators": json.loads(CONSTANT_ONE)}), encoding='utf-8')
    code, payload = run(tmp_path, 'closure', '--K', '3', '--F', '2', '--generators', f'@{path}')
    assert code == 0
    assert payload["ranks"] == [1]


def test_not_coprime_exit_code(tmp_path):
    code, _ = run(tmp_path, 'closure', '--K', '2', '--F', '2', '--generators', '[]')
    assert code == 2


def test_malformed_input_exit_code(tmp_path):
    code, _ = run(tmp_path, 'closure', '--K', '3', '--F', '2', '--generators', '{not json')
    assert code == 3
    code, _ = run(tmp_path, 'closure', '--K', '4', '--F', '2', '--generators', '[]')
    assert code == 3


def test_decompose_not_coprime_exit_code(tmp_path):
    function = json.dumps({"arity": 1, "table": [1, 0]})
    code, payload = run(tmp_path, 'decompose', '--K', '2', '--F', '2', '--function', function)
    assert code == 2
    assert payload is None


@pytest.mark.parametrize("argv", [
    ['closure', '--K', '3', '--F', '2', '--generators', '[]', '--arity', 'two'],
    ['closure', '--K', '3', '--F', '2'],
    ['enumerate', '--K', '3', '--F', '2', '--strategy', 'guess'],
    ['no-such-command'],
])
def test_usage_errors_are_malformed_input(tmp_path, argv, capsys):
    code, payload = run(tmp_path, *argv)
    assert code == 3
    assert payload is None
    assert 'error:' in capsys.readouterr().err


def test_unary_check(tmp_path):
    generators = json.dumps([{"arity": 2, "table": [0, 1, 1, 0, 0, 1, 1, 1, 0]}])
    code, payload = run(tmp_path, 'unary-check', '--K', '3', '--F', '2', '--generators', generators,
                        '--k-max', '2')
    assert code == 0
    assert payload["equal"] is True
    assert [v["k"] for v in payload["verdicts"]] == [1, 2]


def test_unary_check_budget_exit_code(tmp_path):
    code, _ = run(tmp_path, 'unary-check', '--K', '3', '--F', '2', '--generators', CONSTANT_ONE,
                  '--k-max', '3', '--budget', '10')
    assert code == 4


def test_decompose_constant(tmp_path):
    function = json.dumps({"arity": 1, "table": [[3]] * 6})
    code, payload = run(tmp_path, 'decompose', '--K', '[2, 3]', '--F', '5', '--function', function)
    assert code == 0
    assert len(payload["components"]) == 4
    assert payload["nonzero"] == [[]]


def test_tk_reports_factor(tmp_path):
    function = json.dumps({"arity": 1, "table": [0, 2, 4]})
    code, payload = run(tmp_path, 'tk', '--K', '3', '--F', '5', '--function', function, '--arity', '3')
    assert code == 0
    assert payload["factor"] == [3]
    assert payload["r_k_equals_factor_times_t_k"] is True


def test_tk_rejects_non_absorbing(tmp_path):
    function = json.dumps({"arity": 1, "table": [1, 0, 0]})
    code, _ = run(tmp_path, 'tk', '--K', '3', '--F', '2', '--function', function)
    assert code == 3


def test_assemble(tmp_path):
    code, payload = run(tmp_path, 'assemble', '--K', '3', '--F', '[2, 5]')
    assert code == 0
    assert payload["size"] == payload["factor_sizes"][0] * payload["factor_sizes"][1]
    assert payload["rho_psi_identity"] is True


def test_verify(tmp_path):
    code, payload = run(tmp_path, 'verify', '--K', '[2, 3]', '--F', '5', '--samples', '3', '--seed', '7')
    assert code == 0
    assert payload["passed"] == {"decomposition": 3, "r_k": 3, "lines": 3}


def test_enumerate_is_deterministic(tmp_path):
    outputs = []
    for run_id in range(2):
        out = tmp_path / f'lattice{run_id}.json'
        dot = tmp_path / f'lattice{run_id}.dot'
        code = main(['enumerate', '--K', '3', '--F', '2', '--strategy', 'both',
                     '--out', str(out), '--dot', str(dot)])
        assert code == 0
        outputs.append((out.read_bytes(), dot.read_bytes()))
    assert outputs[0] == outputs[1]

    payload = json.loads(outputs[0][0])
    assert payload["count"] == 6
    assert payload["bound"] == 15
    assert outputs[0][1].decode('utf-8').count('[label=') == 6


def test_load_json():
    assert load_json('[1, 2]') == [1, 2]
    with pytest.raises(MalformedInput):
        load_json('@/nonexistent/file.json')


if __name__ == '__main__':
    raise SystemExit(pytest.main([__file__, '-v']))
