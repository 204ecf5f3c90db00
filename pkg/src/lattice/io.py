"""
Lattice Files
JSON encoding of lattices with rationals serialized as "p/q" strings
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

from ..exactla import RatMat, format_rational, to_fraction
from .lattice import Embedding, Lattice, LatticeError


def lattice_to_dict(lattice: Lattice) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "name": lattice.name,
        "rank": lattice.rank,
        "gram": lattice.gram.to_strings(),
    }
    if lattice.embedding is not None:
        data["embedding"] = {
            "ambient_dim": lattice.embedding.ambient_dim,
            "ambient_scale": format_rational(lattice.embedding.ambient_scale),
            "basis": lattice.embedding.basis.to_strings(),
        }
    return data


def lattice_from_dict(data: Dict[str, Any]) -> Lattice:
    try:
        rank = int(data["rank"])
        gram = RatMat(data["gram"], cols=rank)
        embedding = None
        if data.get("embedding"):
            emb = data["embedding"]
            basis = RatMat(emb["basis"], cols=int(emb["ambient_dim"]))
            embedding = Embedding(basis, to_fraction(emb["ambient_scale"]))
    except (KeyError, TypeError, ValueError) as e:
        raise LatticeError(f"malformed lattice file: {e}") from e
    if gram.rows != rank:
        raise LatticeError(f"rank {rank} does not match Gram size {gram.rows}")
    return Lattice(gram, embedding, name=data.get("name", ""))


def save_lattice(lattice: Lattice, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(lattice_to_dict(lattice), f, indent=2)
    return path


def load_lattice(path: Union[str, Path]) -> Lattice:
    with open(path, "r", encoding="utf-8") as f:
        return lattice_from_dict(json.load(f))
