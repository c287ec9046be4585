"""Recompute the reference worked examples and compare with their stated values."""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import ceil_fraction, diameter_lower_bound, dimension_lower_bound, length_upper_bound, old_diameter_bound
from .codes import direct_sum, metrics
from .constructions import default_evaluation, extended_grs, grs, identity_pair, simplex
from .gf import make_field


@dataclass(frozen=True)
class Row:
    example: str
    quantity: str
    expected: object
    computed: object
    # "stated" when the value is given with the example; "derived" when it
    # follows directly from a stated property (e.g. delta of (I|I)).
    source: str = "stated"

    @property
    def match(self) -> bool:
        return self.expected == self.computed

    def to_dict(self) -> dict:
        return {
            "example": self.example,
            "quantity": self.quantity,
            "expected": str(self.expected),
            "computed": str(self.computed),
            "source": self.source,
            "match": self.match,
        }


def _params(m) -> str:
    return f"[{m.n},{m.k},{m.d}]"


def _grs_rows() -> list[Row]:
    F = make_field(2, 8)
    C = grs(F, *default_evaluation(F, 256), k=100)
    m = metrics(C)
    label = "GRS over GF(2^8)"
    return [
        Row(label, "[n,k,d]", "[256,100,157]", _params(m)),
        Row(label, "d(C-perp)", 101, m.dual_distance.value),
        Row(label, "diameter lower bound", 256, diameter_lower_bound(m.n, m.k, m.q)),
        Row(label, "old diameter bound (ceil)", 255, ceil_fraction(old_diameter_bound(m.n, m.q))),
    ]


def _direct_sum_rows() -> list[Row]:
    F = make_field(2, 8)
    E = extended_grs(F, *default_evaluation(F, 255), k=240)
    S = direct_sum(E, E)
    me, ms = metrics(E), metrics(S)
    label = "extended GRS direct sum"
    return [
        Row(label, "extended GRS [n,k,d]", "[256,240,17]", _params(me)),
        Row(label, "d(C-perp) of extended GRS", 241, me.dual_distance.value),
        Row(label, "direct sum [n,k,d]", "[512,480,17]", _params(ms)),
        Row(label, "direct sum d(C-perp) >= 3", True, ms.dual_distance.at_least(3), "derived"),
        Row(label, "diameter lower bound", 511, diameter_lower_bound(ms.n, ms.k, ms.q)),
        Row(label, "old diameter bound (ceil)", 510, ceil_fraction(old_diameter_bound(ms.n, ms.q))),
    ]


def _identity_pair_rows() -> list[Row]:
    F = make_field(2)
    C = identity_pair(10, F)
    m = metrics(C)
    label = "(I_10|I_10) binary"
    return [
        Row(label, "[n,k,d] (enumerated)", "[20,10,2]", _params(m)),
        Row(label, "diameter (enumerated)", 20, m.delta, "derived"),
        Row(label, "diameter lower bound", 11, diameter_lower_bound(m.n, m.k, m.q)),
        Row(label, "old diameter bound (ceil)", 10, ceil_fraction(old_diameter_bound(m.n, m.q))),
    ]


def _simplex_rows() -> list[Row]:
    F = make_field(2)
    rows = []
    for k in (3, 4, 5):
        delta = 2 ** (k - 2)
        C = simplex(F, k - 1)
        m = metrics(C)
        label = f"binary simplex [{2 ** (k - 1) - 1},{k - 1},{delta}]"
        rows.append(Row(label, "length upper bound 2*delta-1", 2 ** (k - 1) - 1, length_upper_bound(2, delta)))
        rows.append(Row(label, "n = 2*delta - 1 (enumerated)", True, m.n == 2 * m.delta - 1, "derived"))
    for q in (4, 5, 7, 8, 9):
        rows.append(Row(f"[2q+2,4,q]_q, q={q}", "length upper bound at delta=2q", 2 * q + 2, length_upper_bound(q, 2 * q)))
    return rows


def _dimension_rows() -> list[Row]:
    rows = []
    for q in (2, 3, 4):
        for k in (2, 3, 4):
            n = (q**k - 1) // (q - 1)
            rows.append(
                Row(
                    f"[{n},{k},{q ** (k - 1) - 1}]_{q}, delta={q ** (k - 1)}",
                    "dimension lower bound",
                    k,
                    dimension_lower_bound(n, q, q ** (k - 1)),
                )
            )
    return rows


def reproduce_rows() -> list[Row]:
    return _grs_rows() + _direct_sum_rows() + _identity_pair_rows() + _simplex_rows() + _dimension_rows()


def format_rows(rows: list[Row]) -> str:
    header = f"{'example':<34} {'quantity':<34} {'expected':>14} {'computed':>14}  match"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r.example:<34} {r.quantity:<34} {str(r.expected):>14} {str(r.computed):>14}  "
            f"{'yes' if r.match else 'MISMATCH'}"
        )
    return "\n".join(lines)
