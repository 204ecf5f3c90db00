"""
Tests for the command-line interface
"""

import json

import pytest
from click.testing import CliRunner

from src.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "paths:\n"
        f"  lattice_dir: {tmp_path / 'lattices'}\n"
        f"  report_dir: {tmp_path / 'reports'}\n"
        f"  cache_dir: {tmp_path / 'cache'}\n"
    )
    return str(path)


def invoke(runner, config_file, *args):
    return runner.invoke(cli, ['--config', config_file, *args])


class TestCli:
    def test_version(self, runner):
        result = runner.invoke(cli, ['--version'])
        assert result.exit_code == 0
        assert "1.0.0" in result.output

    def test_lemmas(self, runner, config_file):
        result = invoke(runner, config_file, '--json', 'lemmas')
        assert result.exit_code == 0
        ids = json.loads(result.output)
        assert "lie-identities" in ids and "appc-Leech" in ids

    def test_verify_passes(self, runner, config_file):
        result = invoke(runner, config_file, 'verify', 'lie-identities', '--n', '3')
        assert result.exit_code == 0
        assert "PASS" in result.output
        assert "n=3" in result.output

    def test_verify_json(self, runner, config_file):
        result = invoke(runner, config_file, '--json', 'verify', 'eq-K-3C')
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data['status'] == "pass"
        assert data['metrics']['gamma_norm'] == "16/9"
        assert data['seed'] is None

    def test_unknown_lemma(self, runner, config_file):
        result = invoke(runner, config_file, 'verify', 'lem-9.9')
        assert result.exit_code == 2

    def test_bad_config(self, runner, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("- not\n- a mapping\n")
        result = runner.invoke(cli, ['--config', str(path), 'lemmas'])
        assert result.exit_code == 2

    def test_build_and_shortvec(self, runner, config_file, tmp_path):
        target = tmp_path / "e8.json"
        result = invoke(runner, config_file, '--json', 'build', 'e8', '-o', str(target))
        assert result.exit_code == 0
        assert json.loads(result.output)['determinant'] == 1
        assert target.exists()

        result = invoke(runner, config_file, '--json', 'shortvec', str(target), '--root-type')
        assert result.exit_code == 0
        info = json.loads(result.output)
        assert info['count'] == 240
        assert info['norm_counts'] == {"2": 240}
        assert info['root_type'] == "E8"

    def test_shortvec_by_name_uses_cache(self, runner, config_file, tmp_path):
        result = invoke(runner, config_file, '--json', 'shortvec', 'a2')
        assert result.exit_code == 0
        assert json.loads(result.output)['count'] == 6
        assert list((tmp_path / "cache").glob("a2-seed*.json"))

    def test_unknown_build(self, runner, config_file):
        assert invoke(runner, config_file, 'build', 'x9').exit_code == 2
        assert invoke(runner, config_file, 'shortvec', 'x9').exit_code == 2

    def test_bad_bound(self, runner, config_file):
        result = invoke(runner, config_file, 'shortvec', 'a2', '--bound', 'two')
        assert result.exit_code == 2

    def test_missing_lattice_file(self, runner, config_file, tmp_path):
        result = invoke(runner, config_file, 'shortvec', str(tmp_path / "nope.json"))
        assert result.exit_code == 2

    def test_glue_sample_and_read(self, runner, config_file, tmp_path):
        target = tmp_path / "glue.json"
        result = invoke(runner, config_file, '--seed', '4', '--json', 'glue', 'sample', '-o', str(target))
        assert result.exit_code == 0
        assert json.loads(result.output)['seed'] == 4

        result = invoke(runner, config_file, '--json', 'glue', 'read', str(target))
        assert result.exit_code == 0
        info = json.loads(result.output)
        assert info['full'] and info['even']

    def test_report_round_trip(self, runner, config_file, tmp_path):
        out = tmp_path / "out"
        result = invoke(runner, config_file, 'report', 'lie-identities', 'eq-K-3C',
                        '--format', 'json', '-o', str(out))
        assert result.exit_code == 0
        (report,) = out.glob("*.json")

        result = invoke(runner, config_file, 'report', '--from', str(report))
        assert result.exit_code == 0
        assert "eq-K-3C" in result.output
        assert "pass: 2" in result.output
