"""JSON result records and the on-disk result cache.

Every rational is stored as an integer pair [a, b]; nothing in a record is a
decimal.  Records serialize with sorted keys and fixed separators so that
equal results give equal bytes.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Any

from .complexity import PairEntry, predicted_zero, total_complexity
from .numtheory import FactoredInt, factorize, psi, psi_breakpoints
from .region import BoundarySet, DEFAULT_KMAX, classify_shape

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
ENGINE_VERSION = "1.0.0"

__all__ = [
    "SCHEMA_VERSION",
    "ENGINE_VERSION",
    "ResultCache",
    "dumps",
    "entry_record",
    "boundary_record",
    "complexity_record",
    "cached_complexity",
    "default_cache_dir",
]

if hasattr(sys, "set_int_max_str_digits"):
    # witness residues run to tens of thousands of digits
    sys.set_int_max_str_digits(0)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _pairs(pairs) -> list[list[int]]:
    return [list(p) for p in sorted(pairs)]


def entry_record(N: int, e: PairEntry) -> dict:
    return {
        "n": e.n,
        "n_next": e.n_next,
        "class": e.cls.value,
        "shape": e.shape.value,
        "certificate_k": e.certificate_k,
        "disks": _pairs(e.provenance(N)),
        "c": e.complexity,
    }


def boundary_record(bs: BoundarySet, complexity: int) -> dict:
    N = bs.region.N.require_value()
    return {
        "n": bs.region.n,
        "n_next": bs.region.n_next,
        "class": bs.region.cls.value,
        "shape": classify_shape(bs).value,
        "certificate_k": bs.certificate_k,
        "disks": _pairs(bs.provenance),
        "c": complexity,
    }


def complexity_record(N: FactoredInt, regions: list[dict], timings: dict | None = None) -> dict:
    c = max((r["c"] for r in regions), default=0)
    pz = predicted_zero(N)
    return {
        "schema_version": SCHEMA_VERSION,
        "engine_version": ENGINE_VERSION,
        "N": N.require_value(),
        "factorization": [list(pe) for pe in N.primes],
        "psi": psi(N),
        "regions": regions,
        "c": c,
        "predicted_zero": pz,
        "agreement": (c == 0) == pz,
        "timings": timings,
    }


def default_cache_dir() -> Path:
    return Path(os.environ.get("FORD_CACHE") or "./.ford-cache")


class ResultCache:
    """Content-addressed JSON store keyed on (N, n, k_max, engine_version).

    Writes go to a temporary file in the same directory and are renamed into
    place, so readers never see a partial entry.  Unreadable entries and
    entries from another engine version count as misses.
    """

    def __init__(self, root: Path | str | None, engine_version: str = ENGINE_VERSION):
        self.root = Path(root) if root is not None else None
        self.engine_version = engine_version
        self.hits = 0
        self.misses = 0

    def _key(self, N: int, n: int, k_max: int) -> dict:
        return {"N": N, "n": n, "k_max": k_max, "engine_version": self.engine_version}

    def path(self, N: int, n: int, k_max: int) -> Path:
        digest = hashlib.sha256(dumps(self._key(N, n, k_max)).encode()).hexdigest()
        return self.root / digest[:2] / f"{digest}.json"

    def lookup(self, N: int, n: int, k_max: int) -> dict | None:
        if self.root is None:
            return None
        p = self.path(N, n, k_max)
        try:
            doc = json.loads(p.read_text())
            if doc["key"] != self._key(N, n, k_max):
                raise ValueError("key mismatch")
            rec = doc["record"]
        except FileNotFoundError:
            self.misses += 1
            return None
        except (ValueError, KeyError, TypeError, OSError) as exc:
            log.warning("ignoring corrupt cache entry %s: %s", p, exc)
            self.misses += 1
            return None
        self.hits += 1
        return rec

    def store(self, N: int, n: int, k_max: int, record: dict) -> None:
        if self.root is None:
            return
        p = self.path(N, n, k_max)
        p.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=p.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(dumps({"key": self._key(N, n, k_max), "record": record}))
            os.replace(tmp, p)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise


def cached_complexity(N: int, k_max: int = DEFAULT_KMAX, cache: ResultCache | None = None) -> tuple[dict, bool]:
    """Complexity record for N, assembled from cached regions when all are present.

    Returns (record, served_from_cache).
    """
    F = factorize(N)
    starts = [n for n, _ in psi_breakpoints(F).regions()]
    regions = []
    if cache is not None:
        for n in starts:
            rec = cache.lookup(N, n, k_max)
            if rec is None:
                break
            regions.append(rec)
    if len(regions) == len(starts):
        return complexity_record(F, regions), True
    report = total_complexity(F, k_max)
    regions = [entry_record(N, e) for e in report.pairs]
    if cache is not None:
        for r in regions:
            cache.store(N, r["n"], k_max, r)
    return complexity_record(F, regions), False
