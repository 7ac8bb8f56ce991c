"""
Tests for the suite driver, the report trail and the command line.
"""
import json

import pytest

import run
from src.app import build_tasks, run_suite
from src.catalog.registry import MANIFEST_SCHEMA
from src.utils.report_logger import REPORT_SCHEMA, ReportLogger, canonical_body, determinism_hash


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for key in ('VERIFY_DIGITS', 'VERIFY_JOBS', 'VERIFY_SEEDS', 'VERIFY_N_MAX',
                'VERIFY_REPORT_DIR', 'VERIFY_CONFIG_PATH'):
        monkeypatch.delenv(key, raising=False)


def _read_lines(path):
    with open(path) as f:
        return [json.loads(line) for line in f if line.strip()]


# -- tasks ------------------------------------------------------------------------

def test_tasks_for_constrained_bilateral():
    tasks = build_tasks('B5*', 2, 2)
    kinds = [task[0] for task in tasks]
    assert kinds.count('verify') == 4
    assert kinds.count('independence') == 4
    assert 'reduce' not in kinds


def test_tasks_respect_dimension_policy():
    tasks = build_tasks('T4_*', 2, 1)
    assert tasks == [('verify', 'T4_KAJIHARA_EULER', 1, 0), ('verify', 'T4_KAJIHARA_EULER', 2, 0),
                     ('reduce', 'T4_KAJIHARA_EULER', 1, 0)]
    assert build_tasks('I_G2', 1, 3) == []


def test_tasks_restricted_to_manifest_ids():
    tasks = build_tasks('U_*', 1, 1, ids=['U_QPS'])
    assert tasks == [('verify', 'U_QPS', 1, 0)]


# -- report trail -------------------------------------------------------------------

def test_canonical_body_drops_volatile_fields():
    first = {'id': 'A', 'residual': 0.5, 'runtime_ms': 3, 'timestamp': 1.0, 'report_uuid': 'x'}
    second = {'id': 'A', 'residual': 0.5, 'runtime_ms': 9, 'timestamp': 2.0, 'report_uuid': 'y'}
    assert canonical_body(first) == canonical_body(second)
    assert determinism_hash([first]) == determinism_hash([second])
    assert determinism_hash([first, first]) != determinism_hash([first])


def test_report_logger_writes_lines(tmp_path):
    path = tmp_path / 'nested' / 'trail.jsonl'
    report_logger = ReportLogger(report_path=str(path))
    report_logger.log_report({'id': 'A', 'pass': True})
    report_logger.log_report({'id': 'B', 'pass': False})
    summary = report_logger.log_summary({'suite': 'test'})
    assert (summary['passed'], summary['failed']) == (1, 1)
    lines = _read_lines(path)
    assert [line.get('id') for line in lines] == ['A', 'B', None]
    assert lines[-1]['kind'] == 'summary'
    assert all(line['schema'] == REPORT_SCHEMA for line in lines)


# -- suite runs --------------------------------------------------------------------

def test_suite_is_deterministic(tmp_path):
    arguments = dict(pattern='U_QBIN_T,S2_*', n_max=2, seeds=2, digits=20)
    reports, summary = run_suite(report_path=str(tmp_path / 'first.jsonl'), **arguments)
    _, again = run_suite(report_path=str(tmp_path / 'second.jsonl'), **arguments)
    assert summary['determinism_hash'] == again['determinism_hash']
    assert summary['tasks'] == len(reports) == 2 + 4
    assert summary['failed'] == 0
    assert summary['n_independence'] is None
    assert len(_read_lines(tmp_path / 'first.jsonl')) == len(reports) + 1


def test_seed_count_changes_hash(tmp_path):
    _, one = run_suite('U_QBIN_T', n_max=1, seeds=1, digits=20, report_path=str(tmp_path / 'a.jsonl'))
    _, two = run_suite('U_QBIN_T', n_max=1, seeds=2, digits=20, report_path=str(tmp_path / 'b.jsonl'))
    assert one['determinism_hash'] != two['determinism_hash']


def test_independence_summary(tmp_path):
    _, summary = run_suite('B5*', n_max=1, seeds=1, digits=20, report_path=str(tmp_path / 'b5.jsonl'))
    assert summary['n_independence'] == {'record': 'B5_CONSTRAINED', 'runs': 1, 'holds': True}


def test_settings_file_supplies_defaults(tmp_path, monkeypatch):
    config = tmp_path / 'verify.json'
    config.write_text('{"seeds": 3, "digits": 20}')
    monkeypatch.setenv('VERIFY_CONFIG_PATH', str(config))
    reports, summary = run_suite('U_QPS', n_max=1, report_path=str(tmp_path / 'r.jsonl'))
    assert [r['seed'] for r in reports] == [0, 1, 2]
    assert summary['digits'] == 20


@pytest.mark.slow
def test_worker_count_does_not_change_hash(tmp_path):
    arguments = dict(pattern='U_QBIN_NT,S5_*,B3_*', n_max=2, seeds=2, digits=20)
    _, single = run_suite(jobs=1, report_path=str(tmp_path / 'one.jsonl'), **arguments)
    _, pooled = run_suite(jobs=2, report_path=str(tmp_path / 'two.jsonl'), **arguments)
    assert single['determinism_hash'] == pooled['determinism_hash']


# -- command line --------------------------------------------------------------------

def test_cli_requires_command(capsys):
    assert run.main([]) == run.EXIT_USAGE
    assert 'error:' in capsys.readouterr().err


def test_cli_unknown_suite(capsys, tmp_path):
    code = run.main(['verify', '--suite', 'nonexistent', '--report', str(tmp_path / 'r.jsonl')])
    assert code == run.EXIT_USAGE
    assert 'matches no record' in capsys.readouterr().err


def test_cli_bad_option(capsys):
    assert run.main(['verify', '--seeds', 'many']) == run.EXIT_USAGE


def test_cli_list(capsys):
    assert run.main(['list', '--suite', 'B5*', '--notes']) == run.EXIT_OK
    out = capsys.readouterr().out
    assert 'B5_CONSTRAINED' in out
    assert 'anchor:' in out


def test_cli_manifest_and_restricted_verify(tmp_path, capsys):
    manifest_path = tmp_path / 'manifest.json'
    assert run.main(['manifest', '--output', str(manifest_path)]) == run.EXIT_OK
    document = json.loads(manifest_path.read_text())
    assert document['schema'] == MANIFEST_SCHEMA

    report_path = tmp_path / 'report.jsonl'
    code = run.main(['verify', '--suite', 'U_QBIN_T', '--n-max', '1', '--seeds', '1', '--digits', '20',
                     '--manifest', str(manifest_path), '--report', str(report_path)])
    assert code == run.EXIT_OK
    assert '1 passed, 0 failed' in capsys.readouterr().out
    lines = _read_lines(report_path)
    assert lines[0]['id'] == 'U_QBIN_T'
    assert lines[-1]['kind'] == 'summary'


def test_cli_unreadable_manifest(tmp_path):
    broken = tmp_path / 'broken.json'
    broken.write_text('{not json')
    assert run.main(['verify', '--manifest', str(broken)]) == run.EXIT_USAGE
