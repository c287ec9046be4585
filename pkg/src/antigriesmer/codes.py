"""Linear codes: weight enumeration, duals, dual distance, puncturing."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

import numpy as np

from .gf import FieldSpec
from .matrix import MatrixGF, field_matmul, null_space, rank, rref

DEFAULT_ENUMERATION_LIMIT = 2**24
ENUMERATION_LIMIT_ENV = "ANTIGRIESMER_ENUM_LIMIT"
DEFAULT_DUAL_MAX_T = 4
# Upper bound on column subsets examined by the dual-distance search.
DUAL_SUBSET_BUDGET = 200_000
# Target number of field entries held in memory by the enumeration kernel.
_BLOCK_ENTRIES = 1 << 22


class CodeError(ValueError):
    """Invalid code construction or operation."""


class RankError(CodeError):
    def __init__(self, rank: int, rows: int):
        super().__init__(f"generator matrix has rank {rank} but {rows} rows")
        self.rank = rank
        self.rows = rows


class InfeasibleEnumeration(RuntimeError):
    """Exhaustive enumeration would exceed the budget and no shortcut applies."""


def default_enumeration_limit() -> int:
    raw = os.environ.get(ENUMERATION_LIMIT_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise CodeError(f"{ENUMERATION_LIMIT_ENV}={raw!r} is not an integer") from None
    return DEFAULT_ENUMERATION_LIMIT


@dataclass(frozen=True)
class KnownParameters:
    """Parameters established by the construction rather than by enumeration."""

    d: int
    delta: int
    dual_distance: int | None
    source: str


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An [n, k]_q code given by a full-rank k x n generator matrix."""

    G: MatrixGF
    name: str = ""
    known: KnownParameters | None = dc_field(default=None, repr=False)
    verify_rank: bool = dc_field(default=True, repr=False)

    def __post_init__(self):
        if self.G.rows < 1 or self.G.cols < 1:
            raise CodeError(f"need 1 <= k <= n, got generator shape {self.G.shape}")
        if self.verify_rank:
            r = rank(self.G)
            if r != self.G.rows:
                raise RankError(r, self.G.rows)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], name: str = "") -> LinearCode:
        return cls(MatrixGF.from_rows(field, rows), name=name)

    @property
    def field(self) -> FieldSpec:
        return self.G.field

    @property
    def q(self) -> int:
        return self.G.field.q

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    @property
    def size(self) -> int:
        return self.q**self.k

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<LinearCode{label} [{self.n},{self.k}]_{self.q}>"

    def encode(self, message: Sequence[int]) -> np.ndarray:
        msg = np.asarray(message, dtype=np.int64)
        if msg.shape != (self.k,):
            raise CodeError(f"message must have length {self.k}")
        return field_matmul(self.field, msg[None, :], self.G.entries)[0]

    def contains(self, word: Sequence[int]) -> bool:
        w = np.asarray(word, dtype=np.int64)
        if w.shape != (self.n,):
            return False
        return rank(self.G.vstack(MatrixGF(self.field, w[None, :]))) == self.k


@dataclass(frozen=True)
class ZeroCode:
    """The zero-dimensional code {0} of length n (dual of a k = n code)."""

    field: FieldSpec
    n: int
    k: int = 0

    @property
    def q(self) -> int:
        return self.field.q


@dataclass(frozen=True)
class DualDistance:
    """d(C-perp): exact value, a certified lower bound, or the zero-dual case.

    When ``zero_dual`` is set the dual is {0} and every ``at_least`` query is
    vacuously true.  Otherwise ``value`` is d(C-perp) if ``exact`` and a lower
    bound on it if not.
    """

    value: int | None
    exact: bool
    zero_dual: bool = False

    def at_least(self, t: int) -> bool:
        if self.zero_dual:
            return True
        assert self.value is not None
        if self.exact:
            return self.value >= t
        if self.value >= t:
            return True
        raise CodeError(f"dual distance only known to be >= {self.value}; cannot decide >= {t}")

    def __str__(self) -> str:
        if self.zero_dual:
            return "dual is zero code"
        return f"{self.value}" if self.exact else f">= {self.value}"

    def to_dict(self) -> dict:
        return {"value": self.value, "exact": self.exact, "zero_dual": self.zero_dual}

    @classmethod
    def from_dict(cls, doc: dict) -> DualDistance:
        return cls(doc["value"], doc["exact"], doc.get("zero_dual", False))


@dataclass(frozen=True)
class CodeMetrics:
    q: int
    n: int
    k: int
    d: int | None
    delta: int
    dual_distance: DualDistance | None = None
    weight_distribution: dict[int, int] | None = None
    method: str = "enumeration"

    @property
    def size(self) -> int:
        return self.q**self.k

    @classmethod
    def zero(cls, q: int, n: int) -> CodeMetrics:
        """Metrics of {0}: no minimum distance, diameter 0."""
        return cls(q=q, n=n, k=0, d=None, delta=0, weight_distribution={0: 1}, method="trivial")

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "delta": self.delta,
            "dual_distance": self.dual_distance.to_dict() if self.dual_distance else None,
            "weight_distribution": (
                {str(w): c for w, c in sorted(self.weight_distribution.items())}
                if self.weight_distribution is not None
                else None
            ),
            "method": self.method,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> CodeMetrics:
        wd = doc.get("weight_distribution")
        dd = doc.get("dual_distance")
        return cls(
            q=doc["q"],
            n=doc["n"],
            k=doc["k"],
            d=doc["d"],
            delta=doc["delta"],
            dual_distance=DualDistance.from_dict(dd) if dd else None,
            weight_distribution={int(w): c for w, c in wd.items()} if wd is not None else None,
            method=doc.get("method", "enumeration"),
        )


def weight(c: Sequence[int]) -> int:
    return int(np.count_nonzero(np.asarray(c)))


def support(c: Sequence[int]) -> list[int]:
    return [int(j) for j in np.flatnonzero(np.asarray(c))]


# --- enumeration kernel ---


def _span(field: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """All F_q-combinations of ``rows`` (q^r x n), built one row at a time."""
    n = rows.shape[1]
    words = np.zeros((1, n), dtype=field.dtype)
    scalars = np.arange(field.q, dtype=np.int64)[:, None]
    for g in rows:
        multiples = np.asarray(field.mul_raw(scalars, g[None, :].astype(np.int64)), dtype=field.dtype)
        words = np.asarray(field.add_raw(words[None, :, :], multiples[:, None, :]), dtype=field.dtype)
        words = words.reshape(-1, n)
    return words


def codeword_blocks(C: LinearCode) -> Iterator[np.ndarray]:
    """Yield arrays of codewords that together list every codeword once."""
    F = C.field
    G = C.G.entries
    k, n = G.shape
    r = k
    while r > 0 and F.q**r * n > _BLOCK_ENTRIES:
        r -= 1
    head = _span(F, G[:r])
    tail = _span(F, G[r:])
    for t in tail:
        if not t.any():
            yield head
        else:
            yield np.asarray(F.add_raw(head, t[None, :]), dtype=F.dtype)


def _check_budget(C: LinearCode, enumeration_limit: int | None) -> None:
    limit = default_enumeration_limit() if enumeration_limit is None else enumeration_limit
    if C.size > limit:
        raise InfeasibleEnumeration(
            f"{C!r} has q^k = {C.q}^{C.k} codewords, above the enumeration limit {limit}"
        )


def all_codewords(C: LinearCode, enumeration_limit: int | None = None) -> np.ndarray:
    _check_budget(C, enumeration_limit)
    return np.vstack(list(codeword_blocks(C))).astype(np.int64)


def weight_distribution(C: LinearCode, enumeration_limit: int | None = None) -> dict[int, int]:
    _check_budget(C, enumeration_limit)
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for block in codeword_blocks(C):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=C.n + 1)
    return {w: int(c) for w, c in enumerate(counts) if c}


def metrics(
    C: LinearCode,
    enumeration_limit: int | None = None,
    dual_max_t: int = DEFAULT_DUAL_MAX_T,
) -> CodeMetrics:
    """Exact d, diameter, weight distribution and dual distance of ``C``.

    Codes with more than ``enumeration_limit`` codewords are only accepted when
    their construction supplies ``known`` parameters; otherwise
    :class:`InfeasibleEnumeration` is raised.
    """
    limit = default_enumeration_limit() if enumeration_limit is None else enumeration_limit
    if C.size <= limit:
        wd = weight_distribution(C, limit)
        nonzero = [w for w in wd if w > 0]
        dd = dual_distance_exact(C, dual_max_t)
        return CodeMetrics(
            q=C.q,
            n=C.n,
            k=C.k,
            d=min(nonzero),
            delta=max(nonzero),
            dual_distance=dd,
            weight_distribution=wd,
            method="enumeration",
        )
    if C.known is None:
        raise InfeasibleEnumeration(
            f"{C!r} has q^k = {C.q}^{C.k} codewords, above the enumeration limit {limit}, "
            "and no structural shortcut applies"
        )
    kp = C.known
    if kp.dual_distance is not None:
        dd = DualDistance(kp.dual_distance, exact=True, zero_dual=C.k == C.n)
    else:
        dd = dual_distance_exact(C, dual_max_t)
    return CodeMetrics(
        q=C.q, n=C.n, k=C.k, d=kp.d, delta=kp.delta, dual_distance=dd, method=f"structural:{kp.source}"
    )


# --- dual code and dual distance ---


def dual_code(C: LinearCode) -> LinearCode | ZeroCode:
    if C.k == C.n:
        return ZeroCode(C.field, C.n)
    return LinearCode(null_space(C.G), name=f"dual of {C.name}" if C.name else "", verify_rank=False)


def projective_columns(G: MatrixGF) -> np.ndarray:
    """Columns scaled so their first nonzero entry is 1 (zero columns stay zero)."""
    F = G.field
    E = G.entries
    nz = E != 0
    first = np.argmax(nz, axis=0)
    lead = E[first, np.arange(E.shape[1])]
    lead = np.where(lead == 0, 1, lead)
    return np.asarray(F.mul(E, F.inv(lead)[None, :]), dtype=np.int64)


def zero_columns(G: MatrixGF) -> list[int]:
    return [int(j) for j in np.flatnonzero(~G.entries.any(axis=0))]


def proportional_pairs(G: MatrixGF) -> list[tuple[int, int]]:
    """Pairs (i, j), i < j, of nonzero columns that are scalar multiples."""
    P = projective_columns(G)
    seen: dict[bytes, int] = {}
    pairs = []
    for j in range(G.cols):
        col = P[:, j]
        if not col.any():
            continue
        key = col.tobytes()
        if key in seen:
            pairs.append((seen[key], j))
        else:
            seen[key] = j
    return pairs


def dual_distance_at_least(C: LinearCode, t: int) -> bool:
    """Column test for d(C-perp) >= t.

    t = 2: no zero column.  t = 3: additionally no two columns are scalar
    multiples.  Larger t falls back to the exhaustive subset search.
    """
    if t <= 1:
        return True
    if zero_columns(C.G):
        return False
    if t == 2:
        return True
    if proportional_pairs(C.G):
        return False
    if t == 3:
        return True
    return dual_distance_exact(C, max_t=t - 1).at_least(t)


def dual_distance_exact(
    C: LinearCode, max_t: int = DEFAULT_DUAL_MAX_T, subset_budget: int = DUAL_SUBSET_BUDGET
) -> DualDistance:
    """Smallest t <= max_t such that some t columns of G are dependent.

    Returns the zero-dual marker when k = n, and a lower bound when no
    dependent set of size <= max_t exists or the subset budget runs out.
    """
    if max_t < 1:
        raise CodeError("max_t must be >= 1")
    if C.k == C.n:
        return DualDistance(None, exact=False, zero_dual=True)
    if zero_columns(C.G):
        return DualDistance(1, exact=True)
    if max_t < 2:
        return DualDistance(2, exact=False)
    if proportional_pairs(C.G):
        return DualDistance(2, exact=True)
    E = C.G.entries
    for t in range(3, max_t + 1):
        # Any k + 1 columns are dependent, so t never needs to exceed k + 1.
        if t > C.k + 1:
            break
        if math.comb(C.n, t) > subset_budget:
            return DualDistance(t, exact=False)
        for cols in itertools.combinations(range(C.n), t):
            if rank(MatrixGF(C.field, E[:, cols])) < t:
                return DualDistance(t, exact=True)
    return DualDistance(max_t + 1, exact=False)


# --- puncturing, residuals, direct sums ---


def puncture(C: LinearCode, positions) -> LinearCode:
    """Delete ``positions`` from every codeword; re-base the result via RREF."""
    pos = sorted(set(int(p) for p in positions))
    if any(not 0 <= p < C.n for p in pos):
        raise CodeError(f"positions {pos} outside [0, {C.n})")
    if not pos:
        return C
    M = C.G.delete_columns(pos)
    if M.cols == 0:
        raise CodeError("puncturing removed every coordinate; result is the zero code")
    R, pivots = rref(M)
    if not pivots:
        raise CodeError("puncturing leaves the zero code")
    return LinearCode(R.submatrix(rows=range(len(pivots))), verify_rank=False)


def residual(C: LinearCode, c: Sequence[int]) -> LinearCode:
    """Res(C, c): ``C`` punctured on the support of the nonzero codeword ``c``."""
    word = np.asarray(c, dtype=np.int64)
    if word.shape != (C.n,):
        raise CodeError(f"codeword must have length {C.n}")
    if not word.any():
        raise CodeError("residual code needs a nonzero codeword")
    if not C.contains(word):
        raise CodeError("vector is not a codeword")
    return puncture(C, support(word))


def direct_sum(C1: LinearCode, C2: LinearCode) -> LinearCode:
    if C1.field != C2.field:
        raise CodeError(f"field mismatch: {C1.field} vs {C2.field}")
    G = np.zeros((C1.k + C2.k, C1.n + C2.n), dtype=np.int64)
    G[: C1.k, : C1.n] = C1.G.entries
    G[C1.k :, C1.n :] = C2.G.entries
    known = None
    if C1.known and C2.known:
        a, b = C1.known, C2.known
        dd = None
        if a.dual_distance is not None and b.dual_distance is not None:
            dd = min(a.dual_distance, b.dual_distance)
        known = KnownParameters(
            d=min(a.d, b.d), delta=a.delta + b.delta, dual_distance=dd, source=f"direct sum ({a.source}, {b.source})"
        )
    name = f"{C1.name} + {C2.name}" if C1.name and C2.name else ""
    return LinearCode(MatrixGF(C1.field, G), name=name, known=known, verify_rank=False)
