from __future__ import annotations

import itertools

import pytest

import oracles
from antigriesmer.bounds import diameter_lower_bound
from antigriesmer.search import SearchConfig, read_catalog, run_search, search_point


def brute_point(q, k, n):
    """Diameters of all rank-k codes from column multisets, by direct enumeration."""
    F = oracles.prime_field(q)
    vecs = [v for v in itertools.product(range(q), repeat=k) if any(v)]
    deltas = []
    for cols in itertools.combinations_with_replacement(vecs, n):
        G = [[c[r] for c in cols] for r in range(k)]
        if oracles.rank(F, G) < k:
            continue
        wd = oracles.weight_distribution(F, G)
        deltas.append(max(wd))
    return deltas


def test_binary_k2_n3_attains_bound_and_is_tight():
    row = search_point(2, 2, 3)
    assert row.instances > 0
    assert row.min_delta == 2 == row.diameter_lower_bound
    assert row.attains_diameter_bound
    assert row.anti_griesmer_tight > 0
    assert row.violations == 0 and not row.truncated


@pytest.mark.parametrize("q,k,n", [(2, 2, 4), (2, 3, 5), (3, 2, 4), (3, 2, 2), (5, 2, 3)])
def test_point_matches_brute_force(q, k, n):
    deltas = brute_point(q, k, n)
    row = search_point(q, k, n)
    assert row.instances == len(deltas)
    assert row.min_delta == min(deltas) and row.max_delta == max(deltas)
    assert row.diameter_lower_bound == diameter_lower_bound(n, k, q) <= min(deltas)
    assert row.violations == 0


def test_empty_range_gives_empty_catalog(tmp_path):
    out = tmp_path / "c.csv"
    rows = run_search(SearchConfig((2,), (3,), (1, 2), output=str(out)))
    assert rows == []
    assert read_catalog(out) == []


def test_truncation_is_marked():
    row = search_point(3, 3, 6, budget=50)
    assert row.truncated and row.examined == 50 < row.multisets


def test_parallel_output_is_deterministic(tmp_path):
    cfg = dict(q_values=(2, 3), k_values=(1, 2), n_values=(1, 2, 3, 4))
    a = run_search(SearchConfig(**cfg, workers=1, output=str(tmp_path / "a.csv")))
    b = run_search(SearchConfig(**cfg, workers=2, output=str(tmp_path / "b.csv")))
    assert a == b
    assert (tmp_path / "a.csv").read_text() == (tmp_path / "b.csv").read_text()
    assert read_catalog(tmp_path / "a.csv") == a


def test_projective_columns_only():
    row = search_point(2, 3, 7, projective=True)
    # With 7 projective points and repetition allowed, the simplex code is among the instances.
    assert row.min_delta == 4 and row.anti_griesmer_tight >= 1


def test_binary_simplex_length_attains_length_bound():
    row = search_point(2, 3, 7)
    assert row.anti_griesmer_tight >= 1 and row.violations == 0
