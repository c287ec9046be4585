"""Exhaustive search over small generator matrices for bound tightness.

For each (q, k, n) every multiset of n nonzero columns from F_q^k is tried
once (columns sorted by encoding, multisets in nondecreasing order), rank-k
instances are kept, and their diameters are compared with the diameter lower
bound and the antiGriesmer length bound.
"""

from __future__ import annotations

import csv
import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable

import numpy as np

from .bounds import anti_griesmer_rhs, diameter_lower_bound
from .constructions import projective_points
from .gf import field_of_order
from .matrix import field_matmul

DEFAULT_SEARCH_BUDGET = 200_000
_BATCH_ENTRIES = 1 << 22


@dataclass(frozen=True)
class SearchConfig:
    q_values: tuple[int, ...]
    k_values: tuple[int, ...]
    n_values: tuple[int, ...]
    projective: bool = False
    budget: int = DEFAULT_SEARCH_BUDGET
    output: str | None = None
    workers: int = 1

    def points(self) -> list[tuple[int, int, int]]:
        return sorted((q, k, n) for q in self.q_values for k in self.k_values for n in self.n_values if n >= k >= 1)


@dataclass(frozen=True)
class CatalogRow:
    q: int
    k: int
    n: int
    multisets: int
    examined: int
    instances: int
    min_delta: int | None
    max_delta: int | None
    diameter_lower_bound: int
    attains_diameter_bound: bool
    anti_griesmer_tight: int
    violations: int
    truncated: bool


def _columns(q: int, k: int, projective: bool) -> np.ndarray:
    F = field_of_order(q)
    if projective:
        return projective_points(F, k)
    idx = np.arange(1, q**k, dtype=np.int64)
    return np.stack([(idx // q ** (k - 1 - r)) % q for r in range(k)], axis=0)


def search_point(q: int, k: int, n: int, projective: bool = False, budget: int = DEFAULT_SEARCH_BUDGET) -> CatalogRow:
    F = field_of_order(q)
    cols = _columns(q, k, projective)
    n_cols = cols.shape[1]
    idx = np.arange(q**k, dtype=np.int64)
    messages = np.stack([(idx // q ** (k - 1 - r)) % q for r in range(k)], axis=1)[1:]
    nz = field_matmul(F, messages, cols) != 0

    total = math.comb(n_cols + n - 1, n)
    bound = diameter_lower_bound(n, k, q)
    rhs_cache: dict[int, int] = {}
    examined = instances = tight = violations = 0
    min_delta = max_delta = None
    batch = max(1, _BATCH_ENTRIES // max(1, nz.shape[0] * n))
    multisets = itertools.islice(itertools.combinations_with_replacement(range(n_cols), n), budget)
    while True:
        chunk = list(itertools.islice(multisets, batch))
        if not chunk:
            break
        examined += len(chunk)
        sel = np.array(chunk, dtype=np.int64)
        weights = nz[:, sel].sum(axis=2)
        full_rank = weights.min(axis=0) > 0
        deltas = weights.max(axis=0)[full_rank]
        if deltas.size == 0:
            continue
        instances += int(deltas.size)
        lo, hi = int(deltas.min()), int(deltas.max())
        min_delta = lo if min_delta is None else min(min_delta, lo)
        max_delta = hi if max_delta is None else max(max_delta, hi)
        for delta, count in zip(*np.unique(deltas, return_counts=True)):
            delta = int(delta)
            rhs = rhs_cache.setdefault(delta, anti_griesmer_rhs(q, k, delta))
            if n == rhs:
                tight += int(count)
            elif n > rhs:
                violations += int(count)
    return CatalogRow(
        q=q,
        k=k,
        n=n,
        multisets=total,
        examined=examined,
        instances=instances,
        min_delta=min_delta,
        max_delta=max_delta,
        diameter_lower_bound=bound,
        attains_diameter_bound=min_delta == bound,
        anti_griesmer_tight=tight,
        violations=violations,
        truncated=examined < total,
    )


def _run_point(args: tuple) -> CatalogRow:
    return search_point(*args)


def run_search(config: SearchConfig) -> list[CatalogRow]:
    """Search every (q, k, n) point; output is sorted by (q, k, n) whatever the worker count."""
    jobs = [(q, k, n, config.projective, config.budget) for q, k, n in config.points()]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            rows = list(pool.map(_run_point, jobs))
    else:
        rows = [_run_point(j) for j in jobs]
    rows.sort(key=lambda r: (r.q, r.k, r.n))
    if config.output:
        write_catalog(rows, config.output)
    return rows


def write_catalog(rows: Iterable[CatalogRow], path: str | Path) -> None:
    names = [f.name for f in fields(CatalogRow)]
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=names)
        writer.writeheader()
        for r in rows:
            writer.writerow(asdict(r))


def read_catalog(path: str | Path) -> list[CatalogRow]:
    out = []
    with open(path, newline="") as fh:
        for rec in csv.DictReader(fh):
            out.append(
                CatalogRow(
                    q=int(rec["q"]),
                    k=int(rec["k"]),
                    n=int(rec["n"]),
                    multisets=int(rec["multisets"]),
                    examined=int(rec["examined"]),
                    instances=int(rec["instances"]),
                    min_delta=int(rec["min_delta"]) if rec["min_delta"] else None,
                    max_delta=int(rec["max_delta"]) if rec["max_delta"] else None,
                    diameter_lower_bound=int(rec["diameter_lower_bound"]),
                    attains_diameter_bound=rec["attains_diameter_bound"] == "True",
                    anti_griesmer_tight=int(rec["anti_griesmer_tight"]),
                    violations=int(rec["violations"]),
                    truncated=rec["truncated"] == "True",
                )
            )
    return out
