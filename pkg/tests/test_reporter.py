"""
Tests for the report generator
"""

import json
from fractions import Fraction

import pytest

from src.catalog import NiemeierSample
from src.reporter import SUMMARY_COLUMNS, ReportGenerator
from src.verifier import FAIL, PASS, UNRESOLVED, VerificationResult


@pytest.fixture
def results():
    return [
        VerificationResult("lem-2.2", PASS, {'root_count': 0, 'rank_sum': 16}, runtime_ms=40),
        VerificationResult("eq-K-3C", PASS, {'gamma_norm': Fraction(16, 9)}, runtime_ms=10),
        VerificationResult("appc-D4_6", UNRESOLVED, {'centralizer_order': "unresolved"},
                           runtime_ms=900, seed=7),
        VerificationResult("lem-minvec", FAIL, {'min_vectors': 718}, runtime_ms=50,
                           witness={'metrics': {'min_vectors': 718}}),
    ]


@pytest.fixture
def generator(tmp_path):
    return ReportGenerator(output_dir=str(tmp_path / "reports"))


class TestReportGenerator:
    def test_output_dir_created(self, generator):
        assert generator.output_dir.is_dir()

    def test_summary_frame(self, generator, results):
        frame = generator.summary_frame(results)
        assert list(frame.columns) == SUMMARY_COLUMNS
        assert len(frame) == 4
        assert frame['runtime_ms'].sum() == 1000

    def test_status_counts(self, generator, results):
        assert generator.status_counts(results) == {PASS: 2, FAIL: 1, UNRESOLVED: 1}
        assert generator.status_counts([]) == {PASS: 0, FAIL: 0, UNRESOLVED: 0}

    def test_render_text(self, generator, results):
        text = generator.render_text(results)
        assert "appc-D4_6" in text
        assert "pass: 2, fail: 1, unresolved: 1" in text
        assert generator.render_text([]) == "no results"

    def test_json_report(self, generator, results):
        path = generator.generate_json_report(results, "report.json")
        document = json.loads(open(path, encoding='utf-8').read())
        assert document['summary'][PASS] == 2
        loaded = generator.load_json_report(path)
        assert [r.lemma_id for r in loaded] == [r.lemma_id for r in results]
        assert loaded[1].metrics['gamma_norm'] == "16/9"
        assert loaded[2].seed == 7
        assert loaded[3].witness == {'metrics': {'min_vectors': 718}}

    def test_default_filename(self, generator, results):
        path = generator.generate_json_report(results)
        assert path.endswith(".json") and "report_" in path

    def test_html_report(self, generator, results):
        path = generator.generate_report(results, "report.html")
        html = open(path, encoding='utf-8').read()
        assert "threec Verification Report" in html
        assert "lem-minvec" in html
        assert "16/9" in html

    def test_niemeier_histogram(self, generator):
        samples = [
            NiemeierSample(0, 216, "A8^3", True),
            NiemeierSample(1, 216, "A8^3", True),
            NiemeierSample(2, 72, "A2^12", True),
        ]
        frame = generator.sample_frame(samples)
        assert frame['in_table'].all()
        path = generator.plot_niemeier_histogram(samples, "niemeier.png")
        with open(path, 'rb') as f:
            assert f.read(8) == b"\x89PNG\r\n\x1a\n"
