"""Exact evaluation of anticode bounds.

Every quantity here is a Python ``int`` or ``fractions.Fraction``; floors and
ceilings of quotients are taken with integer division, never floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .codes import CodeMetrics, LinearCode, metrics
from .gf import FieldError, prime_power

Number = Union[int, Fraction]


class BoundError(ValueError):
    """A bound is undefined for the given parameters."""


def ceil_div(a: int, b: int) -> int:
    if b <= 0:
        raise ValueError("divisor must be positive")
    return -((-a) // b)


def ceil_fraction(x: Fraction) -> int:
    return ceil_div(x.numerator, x.denominator)


@dataclass(frozen=True)
class BoundReport:
    """One bound instance ``lhs <relation> rhs``.

    ``holds`` is always evaluated, but a failure only means something when
    ``hypotheses_met`` is true; ``reasons`` lists each hypothesis checked.
    """

    bound_name: str
    lhs: Number | None
    rhs: Number | None
    relation: str = "<="
    holds: bool = True
    tight: bool = False
    hypotheses_met: bool = True
    reasons: tuple[str, ...] = ()
    note: str = ""

    @property
    def violated(self) -> bool:
        return self.hypotheses_met and not self.holds

    def to_dict(self) -> dict:
        return {
            "bound_name": self.bound_name,
            "lhs": _num_to_json(self.lhs),
            "rhs": _num_to_json(self.rhs),
            "relation": self.relation,
            "holds": self.holds,
            "tight": self.tight,
            "hypotheses_met": self.hypotheses_met,
            "reasons": list(self.reasons),
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> BoundReport:
        return cls(
            bound_name=doc["bound_name"],
            lhs=_num_from_json(doc["lhs"]),
            rhs=_num_from_json(doc["rhs"]),
            relation=doc["relation"],
            holds=doc["holds"],
            tight=doc["tight"],
            hypotheses_met=doc["hypotheses_met"],
            reasons=tuple(doc["reasons"]),
            note=doc.get("note", ""),
        )


def _num_to_json(x: Number | None):
    # Strings keep 600-digit integers intact through any JSON consumer.
    if x is None:
        return None
    return str(x)


def _num_from_json(s) -> Number | None:
    if s is None:
        return None
    v = Fraction(s)
    return v.numerator if v.denominator == 1 else v


def compare(
    name: str,
    lhs: Number | None,
    rhs: Number | None,
    relation: str = "<=",
    hypotheses: dict[str, bool] | None = None,
    note: str = "",
) -> BoundReport:
    """Build a report from exact operands; ``hypotheses`` maps label -> satisfied."""
    hyps = hypotheses or {}
    reasons = tuple(f"{label}: {'yes' if ok else 'no'}" for label, ok in hyps.items())
    met = all(hyps.values())
    if lhs is None or rhs is None:
        return BoundReport(name, lhs, rhs, relation, False, False, False, reasons, note)
    if relation == "<=":
        holds = lhs <= rhs
    elif relation == ">=":
        holds = lhs >= rhs
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return BoundReport(name, lhs, rhs, relation, holds, holds and lhs == rhs, met, reasons, note)


@dataclass(frozen=True)
class ParamTuple:
    q: int
    n: int
    k: int
    delta: int
    d: int | None = None
    w: int | None = None

    def __post_init__(self):
        try:
            prime_power(self.q)
        except FieldError as exc:
            raise ValueError(str(exc)) from None
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if not 1 <= self.delta <= self.n:
            raise ValueError(f"need 1 <= delta <= n, got delta={self.delta}")
        if self.d is not None and not 1 <= self.d <= self.delta:
            raise ValueError(f"need 1 <= d <= delta, got d={self.d}")
        if self.w is not None and not 1 <= self.w <= self.n:
            raise ValueError(f"need 1 <= w <= n, got w={self.w}")


# --- closed-form bounds ---


def anti_griesmer_rhs(q: int, k: int, delta: int) -> int:
    """sum_{i<k} floor(delta / q^i)."""
    return sum(delta // q**i for i in range(k))


def griesmer_lhs(q: int, k: int, d: int) -> int:
    """sum_{i<k} ceil(d / q^i)."""
    return sum(ceil_div(d, q**i) for i in range(k))


def diameter_lower_bound_exact(n: int, k: int, q: int) -> Fraction:
    return Fraction(n * q ** (k - 1) * (q - 1), q**k - 1)


def diameter_lower_bound(n: int, k: int, q: int) -> int:
    """ceil(n q^(k-1) (q-1) / (q^k - 1)), the smallest diameter compatible with n, k."""
    return ceil_div(n * q ** (k - 1) * (q - 1), q**k - 1)


def old_diameter_bound(n: int, q: int) -> Fraction:
    """(1 - 1/q) n, the diameter bound previously known for projective codes."""
    return Fraction(n * (q - 1), q)


def farrell_bound(n: int, k: int) -> Fraction:
    """2^(k-1) n / (2^k - 1): binary diameter lower bound."""
    return Fraction(2 ** (k - 1) * n, 2**k - 1)


def length_upper_bound(q: int, delta: int) -> int:
    """Largest length allowed by the diameter alone.

    q delta / (q-1) - 1 when (q-1) divides delta, floor(q delta / (q-1))
    otherwise; 2 delta - 1 for binary codes.
    """
    if q < 2 or delta < 1:
        raise BoundError("need q >= 2 and delta >= 1")
    if delta % (q - 1) == 0:
        return q * delta // (q - 1) - 1
    return q * delta // (q - 1)


def dimension_lower_bound(n: int, q: int, delta: int) -> int:
    """Least k with q^k (delta q - n (q-1)) >= delta q.

    Integer form of k >= log_q(delta / (delta - n (1 - 1/q))).
    """
    gap = delta * q - n * (q - 1)
    if gap <= 0:
        raise BoundError(
            f"bound hypotheses violated: delta*q = {delta * q} <= n*(q-1) = {n * (q - 1)}"
        )
    k = 0
    while q**k * gap < delta * q:
        k += 1
    return k


def weighted_length_bound(q: int, k: int, delta: int, w: int) -> int:
    """w + sum_{i<=k-2} floor(delta / q^i): length bound given a codeword of weight w."""
    return w + anti_griesmer_rhs(q, k - 1, delta)


def weighted_length_bound_rational(q: int, k: int, delta: int, w: int) -> Fraction:
    """Floor-free form w + q (1 - q^-(k-1)) delta / (q - 1)."""
    return w + Fraction(q) * (1 - Fraction(1, q ** (k - 1))) * delta / (q - 1)


def erdos_kleitman_rhs(n: int, delta: int) -> int:
    """sum_{i <= floor(delta/2)} C(n, i): size bound for binary anticodes."""
    if not 0 <= delta <= n:
        raise BoundError(f"need 0 <= delta <= n, got delta={delta}, n={n}")
    return sum(math.comb(n, i) for i in range(delta // 2 + 1))


def small_diameter_check(params: ParamTuple) -> list[BoundReport]:
    """The two small-diameter nonexistence clauses for codes with d(C-perp) >= 2.

    (1) delta < n implies delta >= q.  (2) delta <= q implies n <= q + 1.
    Clauses whose premise is false are reported as vacuously holding.
    """
    q, n, delta = params.q, params.n, params.delta
    reports = []
    premise1 = delta < n
    reports.append(
        BoundReport(
            "small_diameter_1",
            delta,
            q,
            ">=",
            holds=(not premise1) or delta >= q,
            tight=premise1 and delta == q,
            reasons=(f"premise delta < n: {'yes' if premise1 else 'no'}",),
        )
    )
    premise2 = delta <= q
    reports.append(
        BoundReport(
            "small_diameter_2",
            n,
            q + 1,
            "<=",
            holds=(not premise2) or n <= q + 1,
            tight=premise2 and n == q + 1,
            reasons=(f"premise delta <= q: {'yes' if premise2 else 'no'}",),
        )
    )
    return reports


def feasible(params: ParamTuple) -> list[BoundReport]:
    """Every parameter-only test an [n,k]_q code with d(C-perp) >= 2 must pass."""
    q, n, k, delta = params.q, params.n, params.k, params.delta
    reports = [
        compare("anti_griesmer", n, anti_griesmer_rhs(q, k, delta)),
        compare("diameter_lower", delta, diameter_lower_bound(n, k, q), ">="),
        compare("length_upper", n, length_upper_bound(q, delta)),
        *small_diameter_check(params),
    ]
    try:
        reports.append(compare("dimension_lower", k, dimension_lower_bound(n, q, delta), ">="))
    except BoundError as exc:
        reports.append(compare("dimension_lower", k, None, ">=", note=str(exc)))
    if params.d is not None:
        reports.append(compare("griesmer", griesmer_lhs(q, k, params.d), n))
        reports.append(compare("min_weight_length", n, weighted_length_bound(q, k, delta, params.d)))
    if params.w is not None:
        reports.append(compare(f"weighted_length[w={params.w}]", n, weighted_length_bound(q, k, delta, params.w)))
    return reports


def parameter_reports(n: int, k: int, q: int) -> list[BoundReport]:
    """Diameter lower bounds implied by (n, k, q) alone, compared with the older one."""
    new = diameter_lower_bound(n, k, q)
    old = ceil_fraction(old_diameter_bound(n, q))
    out = [
        BoundReport("diameter_lower", None, new, ">=", True, False, True, (), "delta >= value"),
        BoundReport("old_diameter_lower", None, old, ">=", True, False, True, (), "delta >= value"),
        compare("diameter_lower_dominates_old", new, old, ">="),
    ]
    if q == 2:
        out.append(BoundReport("farrell", None, farrell_bound(n, k), ">=", True, False, True, (), "delta >= value"))
    return out


def code_anticode_check(C: CodeMetrics, A: CodeMetrics, n: int) -> BoundReport:
    """|C| |A| <= q^n, asserted only when d(C) >= delta(A) + 1."""
    if C.q != A.q or C.n != n or A.n != n:
        raise ValueError("code and anticode must share field and length")
    hyp = C.d is not None and C.d >= A.delta + 1
    return compare(
        "code_anticode",
        C.size * A.size,
        C.q**n,
        hypotheses={f"d(C) = {C.d} >= delta(A) + 1 = {A.delta + 1}": hyp},
    )


def verify_all(C: LinearCode, enumeration_limit: int | None = None, m: CodeMetrics | None = None) -> list[BoundReport]:
    """Check every applicable bound against the code's actual metrics."""
    m = m or metrics(C, enumeration_limit)
    q, n, k, d, delta = m.q, m.n, m.k, m.d, m.delta
    dd = m.dual_distance
    assert dd is not None
    perp2 = dd.at_least(2)
    perp3 = perp2 and dd.at_least(3)
    h2 = {"d(C-perp) >= 2": perp2}
    # The older diameter bounds were stated for projective codes with
    # n < q^(k-1); they now follow from d(C-perp) >= 2 alone.  Record whether
    # the original regime applied so reports show where the weakening matters.
    original = (
        f"original regime (d(C-perp) >= 3, n < q^(k-1)): {'yes' if perp3 and n < q ** (k - 1) else 'no'}",
    )

    reports = [
        compare("anti_griesmer", n, anti_griesmer_rhs(q, k, delta), hypotheses=h2),
        compare("griesmer", griesmer_lhs(q, k, d), n),
        compare("diameter_lower", delta, diameter_lower_bound(n, k, q), ">=", hypotheses=h2),
        _extend(
            compare("old_diameter_lower", delta, ceil_fraction(old_diameter_bound(n, q)), ">=", hypotheses=h2),
            original,
        ),
    ]
    if q == 2:
        reports.append(_extend(compare("farrell", delta, farrell_bound(n, k), ">=", hypotheses=h2), original))
        reports.append(compare("erdos_kleitman", m.size, erdos_kleitman_rhs(n, delta)))
    for r in small_diameter_check(ParamTuple(q, n, k, delta)):
        reports.append(_extend(r, (f"d(C-perp) >= 2: {'yes' if perp2 else 'no'}",), met=perp2))
    reports.append(compare("length_upper", n, length_upper_bound(q, delta), hypotheses=h2))
    try:
        reports.append(compare("dimension_lower", k, dimension_lower_bound(n, q, delta), ">=", hypotheses=h2))
    except BoundError as exc:
        reports.append(compare("dimension_lower", k, None, ">=", hypotheses=h2, note=str(exc)))
    weights = sorted(w for w in (m.weight_distribution or {d: 1, delta: 1}) if w > 0)
    for w in weights:
        reports.append(compare(f"weighted_length[w={w}]", n, weighted_length_bound(q, k, delta, w), hypotheses=h2))
    reports.append(compare("min_weight_length", n, weighted_length_bound(q, k, delta, d), hypotheses=h2))
    return reports


def _extend(r: BoundReport, reasons: tuple[str, ...], met: bool | None = None) -> BoundReport:
    return BoundReport(
        r.bound_name,
        r.lhs,
        r.rhs,
        r.relation,
        r.holds,
        r.tight,
        r.hypotheses_met if met is None else met,
        r.reasons + reasons,
        r.note,
    )


def format_table(reports: list[BoundReport]) -> str:
    header = f"{'bound':<28} {'lhs':>12} rel {'rhs':>12}  holds  tight  hyp"
    lines = [header, "-" * len(header)]
    for r in reports:
        lhs = "-" if r.lhs is None else _short(r.lhs)
        rhs = "-" if r.rhs is None else _short(r.rhs)
        lines.append(
            f"{r.bound_name:<28} {lhs:>12} {r.relation:>3} {rhs:>12}  "
            f"{'yes' if r.holds else 'NO':<5}  {'yes' if r.tight else 'no':<5}  "
            f"{'met' if r.hypotheses_met else 'unmet'}"
            + (f"  [{'; '.join(r.reasons)}]" if r.reasons else "")
            + (f"  ({r.note})" if r.note else "")
        )
    return "\n".join(lines)


def _short(x: Number) -> str:
    s = str(x)
    return s if len(s) <= 12 else f"{s[:5]}..{s[-5:]}"
