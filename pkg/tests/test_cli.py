import json

import pytest

import trivext
from trivext.cli import main
from trivext.qpa import lint_gap


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(['--version'])
    assert e.value.code == 0
    assert trivext.__version__ in capsys.readouterr().out


def test_missing_command_is_usage_error():
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 1


def test_resolve_periodic(capsys):
    assert main(['resolve', 'chain:2', '--te']) == 0
    out = capsys.readouterr().out
    assert 'periodic, n=2' in out


def test_resolve_json(capsys):
    assert main(['resolve', 'chain:2', '--te', '--json', '-']) == 0
    data = _json(capsys)
    assert data['schema'] == 1
    assert data['command'] == 'resolve'
    verdict = data['results'][0]['verdict']
    assert verdict['n'] == 2
    assert verdict['permutation'] == [1, 0]


def test_resolve_json_file(tmp_path, capsys):
    target = tmp_path / 'report.json'
    assert main(['resolve', 'chain:2', '--te', '--json', str(target)]) == 0
    assert 'periodic' in capsys.readouterr().out
    assert json.loads(target.read_text())['results'][0]['field'] == 'q'


def test_resolve_vanishing():
    assert main(['resolve', 'chain:2']) == 3


def test_resolve_inconclusive():
    assert main(['resolve', 'chain:2', '--te', '--max-steps', '1']) == 4


def test_resolve_poset_file(tmp_path, capsys):
    path = tmp_path / 'a2.poset'
    path.write_text('a < b\n')
    assert main(['resolve', str(path), '--te', '--fields', 'q,2',
                 '--json', '-']) == 0
    data = _json(capsys)
    assert [r['field'] for r in data['results']] == ['q', '2']


def test_resolve_quiver_file(tmp_path):
    path = tmp_path / 'a2.quiver'
    path.write_text('x: 0 -> 1\n')
    assert main(['resolve', str(path), '--te']) == 0


def test_resolve_bimodule(capsys):
    assert main(['resolve', 'chain:1', '--te', '--bimodule', '--fields', '2',
                 '--json', '-']) == 0
    assert _json(capsys)['results'][0]['verdict']['n'] == 1


@pytest.mark.parametrize('source', ['nope', 'boolean:9', 'dynkin:B2'])
def test_bad_input(source, capsys):
    assert main(['resolve', source]) == 2
    assert 'trivext' in capsys.readouterr().err


def test_bad_poset_file(tmp_path):
    path = tmp_path / 'cycle.poset'
    path.write_text('a < b\nb < a\n')
    assert main(['resolve', str(path)]) == 2


def test_census_needs_extended(capsys):
    assert main(['census', '9']) == 1
    assert '--extended' in capsys.readouterr().err


def test_census(capsys):
    assert main(['census', '4', '--workers', '1', '--json', '-']) == 0
    result = _json(capsys)['results'][0]
    assert result['lattice_count'] == 2
    assert result['simple_periodic_count'] == 2


def test_census_json_is_deterministic(capsys):
    main(['census', '4', '--workers', '1', '--json', '-'])
    first = capsys.readouterr().out
    main(['census', '4', '--workers', '2', '--json', '-'])
    assert capsys.readouterr().out == first
    main(['census', '4', '--workers', '1', '--json', '-'])
    assert capsys.readouterr().out == first


def test_coxeter(capsys):
    assert main(['coxeter', 'dynkin:A2', '--json', '-']) == 0
    data = _json(capsys)
    assert data['coxeter'] == [[0, 1], [-1, -1]]
    assert data['coxeter_polynomial'] == 'x^2 + x + 1'
    assert data['coxeter_period'] == 3
    assert data['dynkin_types'] == ['A2']
    assert data['global_dimension'] == 1


def test_coxeter_text(capsys):
    assert main(['coxeter', 'boolean:2']) == 0
    assert 'Coxeter polynomial' in capsys.readouterr().out


def test_verify_dynkin(capsys):
    assert main(['verify-dynkin', '--max-rank', '2', '--fields', 'q,2',
                 '--json', '-']) == 0
    checks = _json(capsys)['checks']
    assert all(c['ok'] for c in checks)
    assert {c['type'] for c in checks} == {'A1', 'A2'}


def test_export_qpa(tmp_path):
    target = tmp_path / 'b2.g'
    assert main(['export-qpa', 'boolean:2', '--output', str(target)]) == 0
    assert lint_gap(target.read_text()) == []


def test_export_qpa_stdout(capsys):
    assert main(['export-qpa', 'chain:2', '--field', '3']) == 0
    assert 'GF(3)' in capsys.readouterr().out


@pytest.mark.parametrize('source', ['antichain:2', 'dynkin:A3'])
def test_export_qpa_rejects(source):
    assert main(['export-qpa', source]) == 2


@pytest.mark.parametrize('argv', [
    ['resolve', 'chain:2', '--fields', '4'],
    ['resolve', 'chain:2', '--max-steps', '0'],
    ['resolve', 'chain:x'],
    ['resolve', 'dynkin:A3:sideways'],
])
def test_bad_values_exit_2(argv):
    assert main(argv) == 2


def test_internal_value_errors_propagate(monkeypatch):
    def broken(*args, **kwargs):
        raise ValueError('internal failure')

    monkeypatch.setattr(trivext.cli, 'syzygy_orbit', broken)
    with pytest.raises(ValueError, match='internal failure'):
        main(['resolve', 'chain:2', '--te'])
