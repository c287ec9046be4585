from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from antigriesmer.gf import (
    DEFAULT_MODULI,
    FieldError,
    enumerate_elements,
    field_isomorphism,
    field_of_order,
    is_irreducible,
    make_field,
    prime_power,
)

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]


def oracle_for(F):
    return oracles.PolyField(F.p, F.m, list(F.modulus))


def test_prime_field_has_linear_modulus():
    F = make_field(2)
    assert F.q == 2 and list(F.modulus) == [0, 1]


def test_gf256_has_256_elements():
    F = make_field(2, 8)
    assert F.q == 256
    assert len(list(enumerate_elements(F))) == 256


def test_gf4_from_explicit_modulus():
    F = make_field(2, 2, [1, 1, 1])
    assert F.q == 4
    assert F.mul(2, 2) == 3


def test_characteristic_two_addition():
    assert make_field(2).add(1, 1) == 0


def test_element_listing():
    assert [int(a) for a in enumerate_elements(make_field(2))] == [0, 1]
    assert [int(a) for a in enumerate_elements(field_of_order(4))] == [0, 1, 2, 3]


def test_irreducibility():
    assert is_irreducible([1, 1, 1], 2)
    assert not is_irreducible([1, 0, 1], 2)
    for p in (2, 3, 5, 7):
        assert is_irreducible([0, 1], p)
    for (p, m), mod in DEFAULT_MODULI.items():
        assert is_irreducible(mod, p), (p, m)


@pytest.mark.parametrize("q", [1, 6, 10, 12, 2**33])
def test_non_prime_power_rejected(q):
    with pytest.raises(FieldError):
        field_of_order(q)


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        make_field(2, 2, [1, 0, 1])


def test_prime_power_decomposition():
    assert prime_power(256) == (2, 8)
    assert prime_power(81) == (3, 4)
    assert prime_power(7) == (7, 1)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_tables_match_schoolbook_oracle(q):
    F = field_of_order(q)
    O = oracle_for(F)
    a, b = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    mul = F.mul(a, b)
    add = F.add(a, b)
    for x in range(q):
        for y in range(q):
            assert mul[x, y] == O.mul(x, y)
            assert add[x, y] == O.add(x, y)


@pytest.mark.parametrize("q", SMALL_ORDERS + [256])
def test_inverse_law(q):
    F = field_of_order(q)
    a = np.arange(1, q)
    assert np.all(F.mul(a, F.inv(a)) == 1)
    assert np.all(F.add(a, F.neg(a)) == 0)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        field_of_order(4).inv(0)
    with pytest.raises(ZeroDivisionError):
        field_of_order(4)(0).inverse()


def test_out_of_range_operand():
    F = field_of_order(4)
    with pytest.raises(FieldError):
        F.add(4, 1)
    with pytest.raises(FieldError):
        F.mul(-1, 1)


def test_mixing_fields_is_an_error():
    a = field_of_order(4)(1)
    b = field_of_order(8)(1)
    with pytest.raises(FieldError):
        a + b


def test_element_operators():
    F = field_of_order(9)
    x, y = F(4), F(7)
    assert int(x * y) == F.mul(4, 7)
    assert (x / y) * y == x
    assert x - x == F(0)
    assert x**8 == F(1)


# Large fields: log tables up to 2^16, polynomial arithmetic above.
@pytest.mark.parametrize(
    "p,m,modulus",
    [(2, 16, None), (2, 17, [1, 0, 0, 1] + [0] * 13 + [1])],
)
def test_large_field_against_oracle(p, m, modulus):
    F = make_field(p, m, modulus)
    O = oracle_for(F)
    rng = np.random.default_rng(1)
    for a, b in rng.integers(0, F.q, size=(200, 2)):
        a, b = int(a), int(b)
        assert F.mul(a, b) == O.mul(a, b)
        assert F.add(a, b) == O.add(a, b)
        if a:
            assert F.mul(a, F.inv(a)) == 1


field_and_triple = st.sampled_from(SMALL_ORDERS + [256]).flatmap(
    lambda q: st.tuples(st.just(q), st.integers(0, q - 1), st.integers(0, q - 1), st.integers(0, q - 1))
)


@settings(max_examples=300, deadline=None)
@given(field_and_triple)
def test_field_axioms(t):
    q, a, b, c = t
    F = field_of_order(q)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a


def test_primitive_element_generates_group():
    for q in SMALL_ORDERS:
        F = field_of_order(q)
        g = F.primitive_element()
        powers = {F.pow(g, e) for e in range(q - 1)}
        assert powers == set(range(1, q))


def test_isomorphism_between_moduli():
    A = make_field(2, 4, [1, 1, 0, 0, 1])
    B = make_field(2, 4, [1, 0, 0, 1, 1])
    phi = field_isomorphism(A, B)
    assert sorted(phi.tolist()) == list(range(16))
    assert phi[0] == 0 and phi[1] == 1
    for a in range(16):
        for b in range(16):
            assert phi[A.mul(a, b)] == B.mul(int(phi[a]), int(phi[b]))
            assert phi[A.add(a, b)] == B.add(int(phi[a]), int(phi[b]))
