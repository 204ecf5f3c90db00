"""
Report Generator
Creates text, JSON and HTML reports from verification results
"""

import json
import logging
from collections import Counter
from dataclasses import asdict
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import matplotlib
import pandas as pd
from jinja2 import Template

from ..verifier import FAIL, PASS, UNRESOLVED, VerificationResult

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ['lemma_id', 'status', 'runtime_ms', 'seed']


class ReportGenerator:
    """Generates verification reports"""

    HTML_TEMPLATE = """<!DOCTYPE html>
<html>
<head>
    <title>threec Verification Report</title>
    <style>
        body { font-family: Arial, sans-serif; margin: 20px; background: #f5f5f5; }
        .container { max-width: 1200px; margin: 0 auto; background: white; padding: 30px; border-radius: 8px; box-shadow: 0 2px 4px rgba(0,0,0,0.1); }
        h1 { color: #2c3e50; border-bottom: 3px solid #3498db; padding-bottom: 10px; }
        h2 { color: #34495e; margin-top: 30px; }
        .summary { background: #ecf0f1; padding: 20px; border-radius: 5px; margin: 20px 0; }
        .metric { display: inline-block; margin: 10px 20px; padding: 15px; background: white; border-radius: 5px; min-width: 160px; }
        .metric-label { font-weight: bold; color: #7f8c8d; font-size: 0.9em; }
        .metric-value { font-size: 2em; color: #2c3e50; margin-top: 5px; }
        .pass { color: #27ae60; }
        .unresolved { color: #f39c12; }
        .fail { color: #e74c3c; }
        table { width: 100%; border-collapse: collapse; margin: 20px 0; }
        th, td { padding: 12px; text-align: left; border-bottom: 1px solid #ddd; vertical-align: top; }
        th { background: #3498db; color: white; }
        tr:hover { background: #f5f5f5; }
        pre { margin: 0; white-space: pre-wrap; font-size: 0.85em; }
    </style>
</head>
<body>
    <div class="container">
        <h1>threec Verification Report</h1>
        <p><strong>Generated:</strong> {{ timestamp }}</p>

        <div class="summary">
            {% for status, count in counts.items() %}
            <div class="metric">
                <div class="metric-label">{{ status }}</div>
                <div class="metric-value {{ status }}">{{ count }}</div>
            </div>
            {% endfor %}
            <div class="metric">
                <div class="metric-label">Total Time</div>
                <div class="metric-value">{{ "%.1f"|format(total_ms / 1000) }}s</div>
            </div>
        </div>

        <h2>Results</h2>
        <table>
            <tr><th>Lemma</th><th>Status</th><th>Time (ms)</th><th>Seed</th><th>Metrics</th></tr>
            {% for r in results %}
            <tr>
                <td>{{ r.lemma_id }}</td>
                <td class="{{ r.status }}">{{ r.status }}</td>
                <td>{{ r.runtime_ms }}</td>
                <td>{{ r.seed if r.seed is not none else "" }}</td>
                <td><pre>{{ r.metrics | tojson(indent=2) }}</pre></td>
            </tr>
            {% endfor %}
        </table>
    </div>
</body>
</html>"""

    def __init__(self, output_dir: str = "reports"):
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def _filename(filename: Optional[str], suffix: str, stem: str = "report") -> str:
        if filename is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            filename = f"{stem}_{timestamp}.{suffix}"
        return filename

    @staticmethod
    def summary_frame(results: Sequence[VerificationResult]) -> pd.DataFrame:
        rows = [{k: r.to_dict()[k] for k in SUMMARY_COLUMNS} for r in results]
        return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)

    @staticmethod
    def status_counts(results: Sequence[VerificationResult]) -> Dict[str, int]:
        counts = Counter(r.status for r in results)
        return {s: counts.get(s, 0) for s in (PASS, FAIL, UNRESOLVED)}

    def render_text(self, results: Sequence[VerificationResult]) -> str:
        """Plain table with one line per lemma and a status tally"""
        if not results:
            return "no results"
        frame = self.summary_frame(results)
        frame['seed'] = frame['seed'].map(lambda s: "" if s is None or pd.isna(s) else int(s))
        counts = self.status_counts(results)
        tally = ", ".join(f"{k}: {v}" for k, v in counts.items())
        return f"{frame.to_string(index=False)}\n\n{tally}"

    def to_document(self, results: Sequence[VerificationResult]) -> Dict[str, Any]:
        return {
            'timestamp': datetime.now().isoformat(),
            'summary': self.status_counts(results),
            'results': [r.to_dict() for r in results],
        }

    def generate_report(self, results: Sequence[VerificationResult], filename: Optional[str] = None) -> str:
        """
        Generate HTML report from verification results

        Args:
            results: Verification results
            filename: Optional filename (defaults to timestamp-based)

        Returns:
            Path to generated report
        """
        report_path = self.output_dir / self._filename(filename, "html")
        frame = self.summary_frame(results)
        template = Template(self.HTML_TEMPLATE)
        html_content = template.render(
            timestamp=datetime.now().isoformat(),
            counts=self.status_counts(results),
            total_ms=int(frame['runtime_ms'].sum()) if len(frame) else 0,
            results=[r.to_dict() for r in results],
        )
        report_path.write_text(html_content, encoding='utf-8')
        logger.info("report generated: %s", report_path)
        return str(report_path)

    def generate_json_report(self, results: Sequence[VerificationResult], filename: Optional[str] = None) -> str:
        """Generate JSON report"""
        report_path = self.output_dir / self._filename(filename, "json")
        report_path.write_text(json.dumps(self.to_document(results), indent=2), encoding='utf-8')
        return str(report_path)

    @staticmethod
    def load_json_report(path: str) -> List[VerificationResult]:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
        return [VerificationResult.from_dict(entry) for entry in data['results']]

    @staticmethod
    def sample_frame(samples: Sequence[Any]) -> pd.DataFrame:
        """One row per Niemeier sample, with an in_table column"""
        frame = pd.DataFrame([asdict(s) for s in samples],
                             columns=['seed', 'root_count', 'root_type', 'even_unimodular'])
        frame['in_table'] = [s.in_table for s in samples]
        return frame

    def plot_niemeier_histogram(self, samples: Sequence[Any], filename: Optional[str] = None) -> str:
        """Bar chart of root-system types over the samples"""
        counts = self.sample_frame(samples)['root_type'].value_counts().sort_index()
        fig, ax = plt.subplots(figsize=(8, 4))
        ax.bar(counts.index.tolist(), counts.values.tolist(), color="#3498db")
        ax.set_xlabel("root system")
        ax.set_ylabel("samples")
        ax.set_title(f"Overlattices of Q + R from {len(samples)} random glues")
        fig.tight_layout()
        plot_path = self.output_dir / self._filename(filename, "png", stem="niemeier")
        fig.savefig(plot_path)
        plt.close(fig)
        return str(plot_path)
