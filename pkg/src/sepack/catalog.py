"""Catalog of named packings: ids, regularities, construction recipes.

The data file stores irrational constants as coefficient quadruples
[a, b, c, d] meaning a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6); everything in
the catalog lives in that ring.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

_BASIS = (1.0, math.sqrt(2.0), math.sqrt(3.0), math.sqrt(6.0))

CATALOG_ONLY = "catalog-only"


def coeff_value(quad) -> float:
    """Evaluate a coefficient quadruple [a, b, c, d]."""
    return float(sum(c * b for c, b in zip(quad, _BASIS)))


def coeff_vector(quads) -> np.ndarray:
    return np.array([coeff_value(q) for q in quads], dtype=float)


@dataclass(frozen=True)
class CatalogEntry:
    """One named packing family and how to build a window of it."""

    id: str
    dimension: int
    regularity: int
    kind: str  # "motif" | "product" | "orbit" | "catalog-only"
    display_name: str
    motif_name: str | None = None
    factors: tuple | None = None
    seed: np.ndarray | None = None
    period: float | None = None
    factors_inferred: bool = False
    notes: str = ""

    @property
    def constructible(self) -> bool:
        return self.kind != CATALOG_ONLY


def _parse_entry(raw: dict) -> CatalogEntry:
    cons = raw["construction"]
    kind = cons["kind"]
    seed = coeff_vector(cons["seed"]) if "seed" in cons else None
    period = coeff_value(cons["period"]) if "period" in cons else None
    if seed is not None:
        seed.setflags(write=False)
    return CatalogEntry(
        id=raw["id"],
        dimension=raw["dimension"],
        regularity=raw["regularity"],
        kind=kind,
        display_name=raw.get("display_name", raw["id"]),
        motif_name=cons.get("name"),
        factors=tuple(cons["factors"]) if "factors" in cons else None,
        seed=seed,
        period=period,
        factors_inferred=raw.get("factors_inferred", False),
        notes=raw.get("notes", ""),
    )


@lru_cache(maxsize=1)
def load_catalog() -> dict:
    """id -> CatalogEntry, parsed once from the packaged data file."""
    text = resources.files("sepack").joinpath("data/catalog.json").read_text()
    data = json.loads(text)
    if data.get("format_version") != 1:
        raise ValueError(f"unsupported catalog format_version {data.get('format_version')}")
    entries = [_parse_entry(raw) for raw in data["entries"]]
    return {e.id: e for e in entries}


def catalog_ids() -> list:
    return list(load_catalog())


def constructible_ids() -> list:
    return [e.id for e in load_catalog().values() if e.constructible]
