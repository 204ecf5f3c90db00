"""
Verifier
Runs lemma checks with pinned seeds and budgets and times each one
"""

import logging
import time
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

from ..catalog import CatalogError
from ..glue import GlueError
from ..lattice import LatticeError
from .factory import DEFAULT_CONFIG_PATH, load_config
from .lemmas import VerificationContext, get_lemma, lemma_ids
from .result import FAIL, PASS, UNRESOLVED, VerificationResult

logger = logging.getLogger(__name__)


class Verifier:
    """Main verifier that binds lemma ids to their checks"""

    def __init__(self, config: Optional[Dict[str, Any]] = None,
                 config_path: Optional[Union[str, Path]] = DEFAULT_CONFIG_PATH,
                 seed: Optional[int] = None, budget_seconds: Optional[float] = None,
                 progress: bool = False, settings: Optional[Dict[str, Any]] = None):
        self.config = config if config is not None else load_config(config_path)
        section = dict(self.config.get('verification', {}))
        section.update(settings or {})
        self.context = VerificationContext(
            seed=int(seed if seed is not None else section.get('seed', 0)),
            budget_seconds=budget_seconds if budget_seconds is not None else section.get('budget_seconds'),
            progress=progress,
            settings=section,
        )

    @staticmethod
    def lemma_ids() -> List[str]:
        return lemma_ids()

    def run(self, lemma_id: str) -> VerificationResult:
        """
        Verify one lemma

        Args:
            lemma_id: registered identifier, e.g. "lem-2.2" or "appc-A8_3"

        Returns:
            VerificationResult; construction defects become status fail with
            the error as witness. Budget errors propagate.
        """
        entry = get_lemma(lemma_id)
        start = time.perf_counter()
        logger.info("verifying %s", lemma_id)
        try:
            outcome = entry.check(self.context)
            status = UNRESOLVED if outcome.unresolved else (PASS if outcome.passed else FAIL)
            metrics, witness = outcome.metrics, outcome.witness
        except (CatalogError, GlueError, LatticeError) as e:
            logger.error("%s failed: %s", lemma_id, e)
            status, metrics, witness = FAIL, {}, {'error': f"{type(e).__name__}: {e}"}
        if status == FAIL and witness is None:
            witness = {'metrics': metrics}
        runtime_ms = int((time.perf_counter() - start) * 1000)
        logger.info("%s: %s in %d ms", lemma_id, status, runtime_ms)
        return VerificationResult(
            lemma_id=lemma_id,
            status=status,
            metrics=metrics,
            runtime_ms=runtime_ms,
            seed=self.context.seed if entry.randomized else None,
            witness=witness,
        )

    def run_all(self, ids: Optional[Iterable[str]] = None, include_slow: bool = True
                ) -> List[VerificationResult]:
        selected = list(ids) if ids is not None else self.lemma_ids()
        if not include_slow:
            selected = [i for i in selected if not get_lemma(i).slow]
        return [self.run(i) for i in selected]


def all_passed(results: Iterable[VerificationResult]) -> bool:
    return all(r.status != FAIL for r in results)
