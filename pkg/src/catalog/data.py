"""
Catalog Data
Checksummed transcription of the explicit Niemeier embeddings and glue vectors
"""

import hashlib
import logging
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import yaml

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent / "data"
EMBEDDING_FILE = DATA_DIR / "embeddings.yaml"


class CatalogError(RuntimeError):
    """A catalog construction could not be completed"""


class ConstructionError(CatalogError):
    """A construction failed one of its own invariant checks"""


class ChecksumMismatchError(ConstructionError):
    """The data file does not match its recorded checksum"""


def file_digest(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def load_embedding_data(path: Optional[Union[str, Path]] = None, verify: bool = True) -> Dict[str, Any]:
    """Parse the embedding data; the checksum file sits next to it with a .sha256 suffix.

    Raises:
        ChecksumMismatchError: if verify is set and the digest differs
    """
    path = Path(path) if path else EMBEDDING_FILE
    if verify:
        expected = Path(str(path) + ".sha256").read_text(encoding="utf-8").strip()
        actual = file_digest(path)
        if actual != expected:
            raise ChecksumMismatchError(f"{path.name}: sha256 {actual} does not match {expected}")
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f)
    logger.debug("loaded %s (version %s)", path.name, data.get("version"))
    return data


@lru_cache(maxsize=None)
def embedding_data() -> Dict[str, Any]:
    return load_embedding_data()


def parse_vector(values: Sequence[Any]) -> List[Fraction]:
    return [Fraction(str(v)) for v in values]


def resolve_entry(entry: Any, symbols: Dict[str, Sequence[Any]], width: int) -> List[Fraction]:
    """A block entry: 0, a symbol name, or a negated symbol name"""
    if entry == 0 or entry == "0":
        return [Fraction(0)] * width
    name = str(entry)
    sign = 1
    if name.startswith("-"):
        sign, name = -1, name[1:]
    if name not in symbols:
        raise ConstructionError(f"unknown symbol {name!r} in catalog data")
    return [sign * x for x in parse_vector(symbols[name])]
