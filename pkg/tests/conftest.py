from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from antigriesmer.codes import LinearCode  # noqa: E402
from antigriesmer.gf import field_of_order  # noqa: E402
from antigriesmer.matrix import MatrixGF, rank  # noqa: E402

CORPUS_SEED = 20241016
CORPUS_SIZE = 1000


def random_code(rng: np.random.Generator, q: int, k: int, n: int) -> LinearCode:
    """Uniform full-rank k x n generator over GF(q) with no zero column."""
    F = field_of_order(q)
    while True:
        E = rng.integers(0, q, size=(k, n), dtype=np.int64)
        if not E.any(axis=0).all():
            continue
        M = MatrixGF(F, E)
        if rank(M) == k:
            return LinearCode(M, verify_rank=False)


def build_corpus(seed: int = CORPUS_SEED, size: int = CORPUS_SIZE) -> list[LinearCode]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(size):
        q = int(rng.choice([2, 3, 4, 5]))
        k = int(rng.integers(1, 6))
        n = int(rng.integers(k, 13))
        out.append(random_code(rng, q, k, n))
    return out


@pytest.fixture(scope="session")
def corpus() -> list[LinearCode]:
    return build_corpus()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
