"""Builders for the code families used throughout the package."""

from __future__ import annotations

import itertools
from typing import Sequence

import jsonschema
import numpy as np

from .codes import CodeError, KnownParameters, LinearCode
from .gf import FieldSpec, make_field
from .matrix import MatrixGF

CODE_SPEC_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["field", "generator"],
    "properties": {
        "name": {"type": "string"},
        "field": {
            "type": "object",
            "required": ["p"],
            "properties": {
                "p": {"type": "integer", "minimum": 2},
                "m": {"type": "integer", "minimum": 1},
                "modulus": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2},
            },
            "additionalProperties": False,
        },
        "generator": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 0}},
        },
    },
    "additionalProperties": False,
}


def _as_elements(field: FieldSpec, values: Sequence[int], what: str) -> np.ndarray:
    arr = np.array([int(v) for v in values], dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= field.q):
        raise CodeError(f"{what} contains values outside {field}")
    return arr


def default_evaluation(field: FieldSpec, n: int) -> tuple[list[int], list[int]]:
    """First ``n`` field elements as evaluation points, all multipliers 1."""
    if not 1 <= n <= field.q:
        raise CodeError(f"need 1 <= n <= q = {field.q}, got n = {n}")
    return list(range(n)), [1] * n


def _vandermonde(field: FieldSpec, alphas: Sequence[int], vs: Sequence[int] | None, k: int) -> np.ndarray:
    a = _as_elements(field, alphas, "alphas")
    n = a.size
    v = np.ones(n, dtype=np.int64) if vs is None else _as_elements(field, vs, "vs")
    if v.size != n:
        raise CodeError(f"{n} evaluation points but {v.size} multipliers")
    if len(set(a.tolist())) != n:
        raise CodeError("evaluation points must be pairwise distinct")
    if np.any(v == 0):
        raise CodeError("multipliers must be nonzero")
    if not 1 <= k <= n:
        raise CodeError(f"need 1 <= k <= n, got k = {k}, n = {n}")
    rows = np.zeros((k, n), dtype=np.int64)
    row = v
    for i in range(k):
        rows[i] = row
        row = np.asarray(field.mul(row, a), dtype=np.int64)
    return rows


def grs(field: FieldSpec, alphas: Sequence[int], vs: Sequence[int] | None, k: int) -> LinearCode:
    """Generalized Reed-Solomon code: rows ``v_j * alpha_j**i`` for i < k."""
    G = _vandermonde(field, alphas, vs, k)
    n = G.shape[1]
    known = KnownParameters(
        d=n - k + 1,
        # f = 1 gives (v_1, ..., v_n), which has full weight.
        delta=n,
        dual_distance=k + 1 if k < n else None,
        source="GRS",
    )
    return LinearCode(MatrixGF(field, G), name=f"GRS[{n},{k}]", known=known, verify_rank=False)


def _extended_grs_diameter(q: int, n: int, k: int) -> int:
    # Full weight n + 1 needs deg f = k - 1 and no root among the alphas:
    # constants (k = 1), a linear polynomial with its root outside the
    # evaluation set (k = 2, n < q) or an irreducible of degree k - 1 >= 2.
    if k == 1 or k >= 3 or n < q:
        return n + 1
    return n


def extended_grs(field: FieldSpec, alphas: Sequence[int], vs: Sequence[int] | None, k: int) -> LinearCode:
    """GRS code with an extra coordinate carrying the coefficient of x^(k-1)."""
    G = _vandermonde(field, alphas, vs, k)
    n = G.shape[1]
    last = np.zeros((k, 1), dtype=np.int64)
    last[k - 1, 0] = 1
    known = KnownParameters(
        d=n - k + 2,
        delta=_extended_grs_diameter(field.q, n, k),
        dual_distance=k + 1,
        source="extended GRS",
    )
    return LinearCode(
        MatrixGF(field, np.hstack([G, last])), name=f"eGRS[{n + 1},{k}]", known=known, verify_rank=False
    )


def projective_points(field: FieldSpec, k: int) -> np.ndarray:
    """One representative per 1-dim subspace of F_q^k, as columns.

    Representatives have first nonzero entry 1; columns appear in
    lexicographic order (top entry most significant).
    """
    pts = []
    for lead in range(k - 1, -1, -1):
        for tail in itertools.product(range(field.q), repeat=k - 1 - lead):
            pts.append((0,) * lead + (1,) + tail)
    return np.array(sorted(pts), dtype=np.int64).T


def simplex(field: FieldSpec, k: int) -> LinearCode:
    """The q-ary simplex code of dimension k: one column per projective point."""
    if k < 2:
        raise CodeError(f"simplex code needs k >= 2, got {k}")
    G = projective_points(field, k)
    w = field.q ** (k - 1)
    known = KnownParameters(d=w, delta=w, dual_distance=3, source="simplex")
    return LinearCode(MatrixGF(field, G), name=f"simplex({field.q},{k})", known=known, verify_rank=False)


def identity_pair(m: int, field: FieldSpec) -> LinearCode:
    """The [2m, m] code generated by (I_m | I_m)."""
    if m < 1:
        raise CodeError(f"m must be >= 1, got {m}")
    eye = np.eye(m, dtype=np.int64)
    known = KnownParameters(d=2, delta=2 * m, dual_distance=2, source="identity pair")
    return LinearCode(MatrixGF(field, np.hstack([eye, eye])), name=f"(I_{m}|I_{m})", known=known, verify_rank=False)


def repetition(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(MatrixGF(field, np.ones((1, n), dtype=np.int64)), name=f"rep({n})")


def to_spec(C: LinearCode) -> dict:
    F = C.field
    doc = {
        "field": {"p": F.p, "m": F.m, "modulus": list(F.modulus)},
        "generator": C.G.tolist(),
    }
    if C.name:
        doc["name"] = C.name
    return doc


def from_spec(document: dict) -> LinearCode:
    """Build a code from a code-spec document, re-verifying the generator rank.

    Raises ``jsonschema.ValidationError`` on schema violations, ``CodeError``
    on non-rectangular or out-of-range generators and ``RankError`` (with the
    computed rank) when the rows are dependent.
    """
    jsonschema.validate(document, CODE_SPEC_SCHEMA)
    fd = document["field"]
    field = make_field(fd["p"], fd.get("m", 1), fd.get("modulus"))
    rows = document["generator"]
    if len({len(r) for r in rows}) != 1:
        raise CodeError("generator rows must all have the same length")
    for r in rows:
        _as_elements(field, r, "generator")
    return LinearCode(MatrixGF.from_rows(field, rows), name=document.get("name", ""))
