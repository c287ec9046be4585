"""Greedy functional partition of the columns of a generator matrix.

Starting from R_0 = all column indices, step i picks a nonzero functional a_i
on F_q^k maximizing the number of remaining columns g_j with a_i(g_j) != 0,
removes those columns (the set S_i) and continues with R_i.  The checkers
below verify on a concrete trace that the a_i are independent, that the S_i
partition the columns, that |S_i| <= floor(|S_{i-1}| / q), and that the
pencil a_{i-1} + t a_i (t in F_q plus infinity) averages as expected.
Together these give n = sum |S_i| <= sum_i floor(delta / q^i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bounds import anti_griesmer_rhs
from .codes import InfeasibleEnumeration, LinearCode, default_enumeration_limit, zero_columns
from .gf import FieldSpec, make_field
from .matrix import MatrixGF, field_matmul, rank


class HypothesisError(ValueError):
    """The generator has a zero column, so d(C-perp) = 1."""

    def __init__(self, column: int):
        super().__init__(f"column {column} of the generator matrix is zero; d(C-perp) >= 2 fails")
        self.column = column


@dataclass(frozen=True)
class PartitionTrace:
    field: FieldSpec
    n: int
    functionals: tuple[tuple[int, ...] | None, ...]
    sets: tuple[frozenset[int], ...]
    remainders: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.functionals)

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self.sets]

    def to_dict(self) -> dict:
        F = self.field
        return {
            "field": {"p": F.p, "m": F.m, "modulus": list(F.modulus)},
            "n": self.n,
            "functionals": [list(a) if a is not None else None for a in self.functionals],
            "sets": [sorted(s) for s in self.sets],
            "remainders": [sorted(r) for r in self.remainders],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> PartitionTrace:
        fd = doc["field"]
        return cls(
            field=make_field(fd["p"], fd["m"], fd["modulus"]),
            n=doc["n"],
            functionals=tuple(tuple(a) if a is not None else None for a in doc["functionals"]),
            sets=tuple(frozenset(s) for s in doc["sets"]),
            remainders=tuple(frozenset(r) for r in doc["remainders"]),
        )


@dataclass(frozen=True)
class PencilCheck:
    """Both sides of the pencil averaging identity at step i (scaled by q + 1)."""

    i: int
    lhs: int
    rhs: int
    per_column_ok: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and self.per_column_ok


def projective_functionals(field: FieldSpec, k: int) -> np.ndarray:
    """Nonzero vectors of F_q^k with first nonzero entry 1, in lexicographic order."""
    q = field.q
    idx = np.arange(q**k, dtype=np.int64)
    digits = np.stack([(idx // q ** (k - 1 - c)) % q for c in range(k)], axis=1)
    nz = digits != 0
    first = np.argmax(nz, axis=1)
    keep = nz.any(axis=1) & (digits[np.arange(len(idx)), first] == 1)
    return digits[keep]


def _apply(field: FieldSpec, functionals: np.ndarray, C: LinearCode) -> np.ndarray:
    return field_matmul(field, functionals, C.G.entries)


def greedy_partition(
    C: LinearCode,
    budget: int | None = None,
    rng: np.random.Generator | None = None,
) -> PartitionTrace:
    """Run the greedy construction on the columns of ``C``'s generator.

    Ties between maximizing functionals go to the lexicographically least
    projective representative, or to a uniformly random one when ``rng`` is
    given.  ``budget`` caps (number of candidate functionals) * n.
    """
    zc = zero_columns(C.G)
    if zc:
        raise HypothesisError(zc[0])
    F, n, k = C.field, C.n, C.k
    limit = default_enumeration_limit() if budget is None else budget
    n_cand = (F.q**k - 1) // (F.q - 1)
    if n_cand * n > limit:
        raise InfeasibleEnumeration(f"{n_cand} candidate functionals x {n} columns exceeds budget {limit}")
    cand = projective_functionals(F, k)
    support = _apply(F, cand, C) != 0

    remaining = np.ones(n, dtype=bool)
    functionals: list[tuple[int, ...] | None] = []
    sets: list[frozenset[int]] = []
    remainders = [frozenset(range(n))]
    for _ in range(k):
        if not remaining.any():
            functionals.append(None)
            sets.append(frozenset())
        else:
            counts = support[:, remaining].sum(axis=1)
            best = np.flatnonzero(counts == counts.max())
            pick = int(best[0]) if rng is None else int(rng.choice(best))
            chosen = support[pick] & remaining
            functionals.append(tuple(int(x) for x in cand[pick]))
            sets.append(frozenset(int(j) for j in np.flatnonzero(chosen)))
            remaining &= ~chosen
        remainders.append(frozenset(int(j) for j in np.flatnonzero(remaining)))
    return PartitionTrace(F, n, tuple(functionals), tuple(sets), tuple(remainders))


def _support_on(C: LinearCode, a: Sequence[int], cols) -> set[int]:
    cols = sorted(cols)
    if not cols:
        return set()
    vals = field_matmul(C.field, np.asarray([a], dtype=np.int64), C.G.entries[:, cols])[0]
    return {j for j, v in zip(cols, vals) if v != 0}


def check_consistency(trace: PartitionTrace, C: LinearCode) -> bool:
    """R_0 = [n], R_i = R_{i-1} minus S_i, S_i = support of a_i on R_{i-1}."""
    if trace.n != C.n or trace.k != C.k or trace.field != C.field:
        return False
    if len(trace.remainders) != trace.k + 1 or len(trace.sets) != trace.k:
        return False
    if trace.remainders[0] != frozenset(range(C.n)):
        return False
    for i in range(trace.k):
        prev, s, a = trace.remainders[i], trace.sets[i], trace.functionals[i]
        if trace.remainders[i + 1] != prev - s:
            return False
        if a is None:
            if s or prev:
                return False
        elif _support_on(C, a, prev) != set(s):
            return False
    return True


def check_independence(trace: PartitionTrace, C: LinearCode) -> bool:
    """a_1..a_i have rank i whenever R_{i-1} is nonempty."""
    for i in range(1, trace.k + 1):
        if not trace.remainders[i - 1]:
            continue
        chosen = trace.functionals[:i]
        if any(a is None for a in chosen):
            return False
        if rank(MatrixGF(C.field, np.array(chosen, dtype=np.int64))) != i:
            return False
    return True


def check_partition(trace: PartitionTrace, C: LinearCode) -> bool:
    """The S_i are pairwise disjoint and cover every column index."""
    seen: set[int] = set()
    for s in trace.sets:
        if seen & s:
            return False
        seen |= s
    return seen == set(range(C.n)) and sum(trace.sizes) == C.n


def check_halving(trace: PartitionTrace) -> bool:
    """|S_i| <= floor(|S_{i-1}| / q) for every i >= 2."""
    q = trace.field.q
    sizes = trace.sizes
    return all(sizes[i] <= sizes[i - 1] // q for i in range(1, len(sizes)))


def check_maximality(trace: PartitionTrace, C: LinearCode) -> bool:
    """No nonzero functional beats a_i on R_{i-1}."""
    F = C.field
    cand = projective_functionals(F, C.k)
    support = _apply(F, cand, C) != 0
    for i, a in enumerate(trace.functionals):
        prev = sorted(trace.remainders[i])
        if a is None or not prev:
            continue
        if support[:, prev].sum(axis=1).max() > len(trace.sets[i]):
            return False
    return True


def averaging_identity(C: LinearCode, trace: PartitionTrace, i: int) -> PencilCheck:
    """Evaluate the pencil b_t = a_{i-1} + t a_i, b_inf = a_i over R_{i-2}.

    ``lhs`` is the double sum of indicators [b_t(g_j) != 0]; ``rhs`` is
    q (|S_{i-1}| + |S_i|).  Each column must contribute exactly q when
    (a_{i-1}(g_j), a_i(g_j)) != (0, 0) and 0 otherwise.  ``i`` is 1-based.
    """
    if i < 2 or i > trace.k:
        raise ValueError(f"step index must satisfy 2 <= i <= {trace.k}, got {i}")
    a_prev, a_cur = trace.functionals[i - 2], trace.functionals[i - 1]
    if a_prev is None or a_cur is None:
        raise ValueError(f"step {i} lacks a_{i - 1} or a_{i}")
    F = C.field
    cols = sorted(trace.remainders[i - 2])
    G = C.G.entries[:, cols]
    prev = np.asarray(a_prev, dtype=np.int64)
    cur = np.asarray(a_cur, dtype=np.int64)
    pencil = [np.asarray(F.add(prev, F.mul(t, cur)), dtype=np.int64) for t in range(F.q)]
    pencil.append(cur)
    values = field_matmul(F, np.array(pencil, dtype=np.int64), G)
    per_column = (values != 0).sum(axis=0)
    u = field_matmul(F, prev[None, :], G)[0]
    v = field_matmul(F, cur[None, :], G)[0]
    expected = np.where((u != 0) | (v != 0), F.q, 0)
    lhs = int(per_column.sum())
    rhs = F.q * (len(trace.sets[i - 2]) + len(trace.sets[i - 1]))
    return PencilCheck(i=i, lhs=lhs, rhs=rhs, per_column_ok=bool(np.array_equal(per_column, expected)))


def pencil_steps(trace: PartitionTrace) -> list[int]:
    return [
        i
        for i in range(2, trace.k + 1)
        if trace.functionals[i - 2] is not None and trace.functionals[i - 1] is not None
    ]


@dataclass(frozen=True)
class TraceVerdict:
    consistent: bool
    independence: bool
    partition: bool
    halving: bool
    maximality: bool
    pencils: tuple[PencilCheck, ...]
    bound_lhs: int
    bound_rhs: int

    @property
    def all_pass(self) -> bool:
        return (
            self.consistent
            and self.independence
            and self.partition
            and self.halving
            and self.maximality
            and all(p.holds for p in self.pencils)
            and self.bound_lhs <= self.bound_rhs
        )

    def to_dict(self) -> dict:
        return {
            "consistent": self.consistent,
            "independence": self.independence,
            "partition": self.partition,
            "halving": self.halving,
            "maximality": self.maximality,
            "pencils": [
                {"i": p.i, "lhs": p.lhs, "rhs": p.rhs, "per_column_ok": p.per_column_ok, "holds": p.holds}
                for p in self.pencils
            ],
            "length_bound": {"n": self.bound_lhs, "rhs": self.bound_rhs},
            "all_pass": self.all_pass,
        }


def verify_trace(trace: PartitionTrace, C: LinearCode) -> TraceVerdict:
    """Run every checker; |S_1| is the diameter, so the length bound uses it."""
    delta = trace.sizes[0] if trace.sets else 0
    return TraceVerdict(
        consistent=check_consistency(trace, C),
        independence=check_independence(trace, C),
        partition=check_partition(trace, C),
        halving=check_halving(trace),
        maximality=check_maximality(trace, C),
        pencils=tuple(averaging_identity(C, trace, i) for i in pencil_steps(trace)),
        bound_lhs=sum(trace.sizes),
        bound_rhs=anti_griesmer_rhs(C.q, C.k, delta),
    )
