"""
Verification Results
One exact, JSON-safe record per lemma run
"""

from dataclasses import dataclass, field
from datetime import datetime
from fractions import Fraction
from typing import Any, Dict, Optional

import numpy as np

from ..exactla import format_rational, to_fraction

PASS = "pass"
FAIL = "fail"
UNRESOLVED = "unresolved"
STATUSES = (PASS, FAIL, UNRESOLVED)


def json_safe(value: Any) -> Any:
    """Rationals become "p/q" strings; tuples, sets and numpy scalars become plain JSON values"""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else format_rational(value)
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [json_safe(v) for v in items]
    if isinstance(value, float):
        raise TypeError("floats are not exact; convert before reporting")
    return str(value)


def parse_exact(value: Any) -> Any:
    """Inverse of json_safe for "p/q" strings"""
    if isinstance(value, str) and "/" in value:
        try:
            return to_fraction(value)
        except ValueError:
            return value
    return value


@dataclass
class VerificationResult:
    lemma_id: str
    status: str
    metrics: Dict[str, Any] = field(default_factory=dict)
    runtime_ms: int = 0
    seed: Optional[int] = None
    witness: Optional[Any] = None
    timestamp: str = field(default_factory=lambda: datetime.now().isoformat())

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}, got {self.status!r}")
        self.metrics = json_safe(self.metrics)
        self.witness = json_safe(self.witness)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            'lemma_id': self.lemma_id,
            'status': self.status,
            'metrics': self.metrics,
            'runtime_ms': self.runtime_ms,
            'seed': self.seed,
            'witness': self.witness,
            'timestamp': self.timestamp,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerificationResult":
        return cls(
            lemma_id=data['lemma_id'],
            status=data['status'],
            metrics=data.get('metrics', {}),
            runtime_ms=int(data.get('runtime_ms', 0)),
            seed=data.get('seed'),
            witness=data.get('witness'),
            timestamp=data.get('timestamp', datetime.now().isoformat()),
        )
