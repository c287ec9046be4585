from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from antigriesmer.bounds import (
    BoundError,
    BoundReport,
    ParamTuple,
    anti_griesmer_rhs,
    ceil_div,
    code_anticode_check,
    diameter_lower_bound,
    diameter_lower_bound_exact,
    dimension_lower_bound,
    erdos_kleitman_rhs,
    farrell_bound,
    feasible,
    griesmer_lhs,
    length_upper_bound,
    old_diameter_bound,
    parameter_reports,
    small_diameter_check,
    verify_all,
    weighted_length_bound,
    weighted_length_bound_rational,
)
from antigriesmer.codes import LinearCode, metrics
from antigriesmer.constructions import identity_pair, simplex
from antigriesmer.gf import make_field

GF2 = make_field(2)


def by_name(reports):
    return {r.bound_name: r for r in reports}


def test_anti_griesmer_examples():
    assert anti_griesmer_rhs(2, 3, 4) == 7
    assert anti_griesmer_rhs(2, 10, 20) == 38
    assert anti_griesmer_rhs(7, 1, 13) == 13


def test_griesmer_examples():
    assert griesmer_lhs(2, 3, 4) == 7
    assert griesmer_lhs(2, 10, 2) == 11
    assert griesmer_lhs(5, 1, 9) == 9


def test_diameter_bound_examples():
    assert diameter_lower_bound(256, 100, 256) == 256
    assert diameter_lower_bound(512, 480, 256) == 511
    assert diameter_lower_bound(20, 10, 2) == 11
    assert math.ceil(old_diameter_bound(256, 256)) == 255
    assert math.ceil(old_diameter_bound(512, 256)) == 510
    assert math.ceil(old_diameter_bound(20, 2)) == 10


def test_farrell_examples():
    assert farrell_bound(7, 3) == 4
    assert farrell_bound(20, 10) == Fraction(10240, 1023)
    assert math.ceil(farrell_bound(20, 10)) == 11
    assert farrell_bound(9, 1) == 9


def test_small_diameter_clauses():
    r1, r2 = small_diameter_check(ParamTuple(2, 5, 1, 1))
    assert not r1.holds
    r1, r2 = small_diameter_check(ParamTuple(4, 5, 2, 4))
    assert r1.holds and r2.holds and r2.tight
    r1, r2 = small_diameter_check(ParamTuple(4, 6, 2, 4))
    assert r1.holds and not r2.holds


def test_length_upper_examples():
    assert length_upper_bound(2, 4) == 7
    assert length_upper_bound(5, 10) == 12
    assert length_upper_bound(3, 4) == 5  # (q-1) | delta: 3*4/2 - 1
    assert length_upper_bound(3, 5) == 7  # otherwise: floor(15/2)
    with pytest.raises(BoundError):
        length_upper_bound(2, 0)


def test_dimension_lower_examples():
    for q in (2, 3, 4):
        for k in (2, 3, 4):
            assert dimension_lower_bound((q**k - 1) // (q - 1), q, q ** (k - 1)) == k
    assert dimension_lower_bound(20, 2, 20) == 1
    assert dimension_lower_bound(7, 2, 4) == 3
    with pytest.raises(BoundError, match="bound hypotheses violated"):
        dimension_lower_bound(8, 2, 4)


def test_weighted_length_examples():
    assert weighted_length_bound(2, 3, 4, 4) == 10
    assert weighted_length_bound(3, 1, 9, 5) == 5
    assert weighted_length_bound(2, 10, 20, 2) == 40


def test_erdos_kleitman_examples():
    assert erdos_kleitman_rhs(7, 4) == 29
    assert erdos_kleitman_rhs(5, 0) == 1
    assert erdos_kleitman_rhs(4, 4) == 11


def test_code_anticode_hypothesis_unmet():
    hamming = LinearCode.from_rows(GF2, [[1, 0, 0, 0, 0, 1, 1], [0, 1, 0, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1, 0], [0, 0, 0, 1, 1, 1, 1]])
    C, A = metrics(hamming), metrics(simplex(GF2, 3))
    assert C.d == 3
    r = code_anticode_check(C, A, 7)
    assert not r.hypotheses_met and not r.violated


def test_code_anticode_hypothesis_met():
    rep = LinearCode.from_rows(GF2, [[1] * 7])
    A = LinearCode.from_rows(GF2, [[1, 1, 0, 0, 0, 0, 0]])
    r = code_anticode_check(metrics(rep), metrics(A), 7)
    assert r.hypotheses_met and r.holds and r.lhs == 4


def test_verify_all_simplex_is_tight():
    reports = by_name(verify_all(simplex(GF2, 3)))
    for name in ("anti_griesmer", "griesmer", "length_upper"):
        assert reports[name].tight and reports[name].hypotheses_met, name
    assert not any(r.violated for r in reports.values())


def test_verify_all_identity_pair():
    reports = by_name(verify_all(identity_pair(10, GF2)))
    ag = reports["anti_griesmer"]
    assert (ag.lhs, ag.rhs, ag.holds) == (20, 38, True)
    dl = reports["diameter_lower"]
    assert (dl.lhs, dl.rhs) == (20, 11)
    assert not any(r.violated for r in reports.values())


def test_verify_all_zero_column_marks_hypothesis():
    C = LinearCode.from_rows(GF2, [[1, 0, 1], [0, 0, 1]])
    reports = by_name(verify_all(C))
    assert not reports["anti_griesmer"].hypotheses_met
    assert any("no" in r for r in reports["anti_griesmer"].reasons)
    assert reports["griesmer"].hypotheses_met


def test_feasible_parameter_mode():
    reports = by_name(feasible(ParamTuple(2, 7, 3, 4, d=4, w=4)))
    assert reports["anti_griesmer"].tight
    assert reports["weighted_length[w=4]"].rhs == 10
    assert not any(r.violated for r in reports.values())


def test_param_tuple_validation():
    with pytest.raises(ValueError):
        ParamTuple(6, 3, 1, 2)
    with pytest.raises(ValueError):
        ParamTuple(2, 3, 4, 2)


def test_parameter_reports_dominance():
    reports = by_name(parameter_reports(256, 100, 256))
    assert reports["diameter_lower"].rhs == 256
    assert reports["old_diameter_lower"].rhs == 255
    assert reports["diameter_lower_dominates_old"].holds


def test_report_roundtrip_keeps_big_integers():
    big = 256**100 - 1
    r = BoundReport("x", big, Fraction(big, 7), "<=", True, False, True, ("a: yes",), "n")
    assert BoundReport.from_dict(r.to_dict()) == r


@settings(max_examples=500, deadline=None)
@given(st.integers(-(10**40), 10**40), st.integers(1, 10**20))
def test_ceil_div(a, b):
    assert ceil_div(a, b) == Fraction(a, b).__ceil__()


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 16, 256]), st.integers(1, 120), st.integers(1, 2000))
def test_closed_forms_against_oracle(q, k, n):
    exact = Fraction(n * q ** (k - 1) * (q - 1), q**k - 1)
    assert diameter_lower_bound_exact(n, k, q) == exact
    assert diameter_lower_bound(n, k, q) == exact.__ceil__()
    delta = n
    assert anti_griesmer_rhs(q, k, delta) == oracles.anti_griesmer(q, k, delta)
    assert griesmer_lhs(q, k, delta) == oracles.griesmer(q, k, delta)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 8), st.integers(1, 500), st.integers(1, 500))
def test_weighted_floor_form_below_rational(q, k, delta, w):
    assert weighted_length_bound(q, k, delta, w) <= weighted_length_bound_rational(q, k, delta, w)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9]), st.integers(1, 300))
def test_length_upper_is_max_anti_griesmer(q, delta):
    # For k large enough the anti-Griesmer sum stabilises at the length bound.
    k = 1
    while q**k <= delta:
        k += 1
    assert anti_griesmer_rhs(q, k + 5, delta) <= length_upper_bound(q, delta)
    assert length_upper_bound(q, delta) <= Fraction(q * delta, q - 1)
