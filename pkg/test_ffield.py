#!/usr/bin/env python3
"""
Тесты арифметики конечных полей и их произведений
"""
import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from modules.core import init_config
from modules.errors import (
    BadDegree, DivisionByZero, FieldTooLarge, InvalidElement, MalformedInput, NotCoprime,
    NotPrime, NotPrimeField, Reducible, ShapeMismatch,
)
from modules.ffield import (
    coprimality_check, decode_element, encode_element, f_add, f_inv, f_mul, f_neg, f_pow, f_sub,
    field_from_dict, field_make, field_matinv, field_matmul, field_rank, is_irreducible,
    prime_moduli, require_coprime, ring_add, ring_elements, ring_from_dict, ring_make, ring_mul,
    ring_neg, ring_one, ring_units, ring_zero,
)

GF9 = field_make(3, 2)
GF8 = field_make(2, 3)


# ============================================================================
# ПОЛЯ
# ============================================================================

def test_prime_field_uses_linear_poly():
    gf2 = field_make(2)
    assert gf2.poly == (0, 1)
    assert gf2.q == 2
    assert repr(gf2) == "GF(2)"


def test_gf4_default_poly_is_the_only_irreducible_quadratic():
    gf4 = field_make(2, 2)
    assert gf4.poly == (1, 1, 1)
    assert gf4.q == 4


def test_gf4_multiplication_reduces_modulo_poly():
    gf4 = field_make(2, 2, poly=(1, 1, 1))
    # x·x = x + 1
    assert f_mul(2, 2, gf4) == 3
    assert f_mul(3, 3, gf4) == 2
    assert f_mul(2, 3, gf4) == 1


def test_composite_characteristic_rejected():
    with pytest.raises(NotPrime):
        field_make(4)


def test_reducible_poly_rejected():
    with pytest.raises(Reducible):
        field_make(2, 2, poly=(1, 0, 1))


def test_prime_field_poly_is_normalised():
    assert field_make(3, 1, poly=(2, 1)) == field_make(3)
    assert field_make(3, 1, poly=(2, 1)).poly == (0, 1)
    assert field_from_dict({"p": 5, "poly": [3, 1]}) == field_make(5)
    assert ring_from_dict([{"p": 3, "poly": [1, 1]}, 2]) == ring_make([field_make(3), field_make(2)])
    with pytest.raises(BadDegree):
        field_make(3, 1, poly=(2, 2))


@pytest.mark.parametrize("k,poly", [(0, None), (2, (1, 1)), (2, (1, 1, 2))])
def test_bad_degree(k, poly):
    with pytest.raises(BadDegree):
        field_make(2, k, poly)


def test_field_too_large_respects_config():
    init_config(max_field_order=16)
    with pytest.raises(FieldTooLarge):
        field_make(2, 5)
    assert field_make(2, 4).q == 16


def test_irreducibility():
    assert is_irreducible((1, 1, 0, 1), 2)       # 1 + x + x^3
    assert not is_irreducible((0, 1, 1), 2)      # x + x^2
    assert is_irreducible((1, 0, 1), 3)          # 1 + x^2 над F_3


def test_field_from_dict_roundtrip():
    assert field_from_dict(GF9.to_dict()) == GF9
    with pytest.raises(MalformedInput):
        field_from_dict({"k": 2})


def test_prime_field_examples():
    gf5 = field_make(5)
    gf3 = field_make(3)
    assert f_inv(2, gf5) == 3
    assert f_add(2, 2, gf3) == 1
    assert f_neg(1, gf3) == 2
    assert f_sub(0, 1, gf5) == 4


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        f_inv(0, GF9)
    with pytest.raises(ZeroDivisionError):
        f_inv(0, field_make(7))


def test_invalid_element():
    with pytest.raises(InvalidElement):
        f_add(9, 0, GF9)


@pytest.mark.parametrize("spec", [GF8, GF9, field_make(2, 4), field_make(7)])
def test_every_nonzero_element_is_invertible(spec):
    for a in range(1, spec.q):
        assert f_mul(a, f_inv(a, spec), spec) == 1


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
def test_gf9_field_axioms(a, b, c):
    assert f_add(a, b, GF9) == f_add(b, a, GF9)
    assert f_mul(a, b, GF9) == f_mul(b, a, GF9)
    assert f_mul(a, f_add(b, c, GF9), GF9) == f_add(f_mul(a, b, GF9), f_mul(a, c, GF9), GF9)
    assert f_add(a, f_neg(a, GF9), GF9) == 0


@given(st.integers(0, 7), st.integers(0, 7))
def test_frobenius_is_additive(a, b):
    p = GF8.p
    assert f_pow(f_add(a, b, GF8), p, GF8) == f_add(f_pow(a, p, GF8), f_pow(b, p, GF8), GF8)


SMALL_FIELDS = [(p, 1) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)] + [
    (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5),
]


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_field_axioms_exhaustively(p, k):
    spec = field_make(p, k)
    A, M = spec.add_table, spec.mul_table
    e = np.arange(spec.q)
    a, b, c = e[:, None, None], e[None, :, None], e[None, None, :]
    assert np.array_equal(A, A.T)
    assert np.array_equal(M, M.T)
    assert np.array_equal(A[A[a, b], c], A[a, A[b, c]])
    assert np.array_equal(M[M[a, b], c], M[a, M[b, c]])
    assert np.array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]])
    assert np.array_equal(A[0], e)
    assert np.array_equal(M[1], e)
    assert not M[0].any()
    assert not A[e, spec.neg_table].any()
    assert (M[e[1:], spec.inv_table[1:]] == 1).all()


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_frobenius_fixes_every_element(p, k):
    spec = field_make(p, k)
    for a in range(spec.q):
        assert f_pow(a, spec.q, spec) == a
        assert f_pow(f_add(a, 1, spec), p, spec) == f_add(f_pow(a, p, spec), 1, spec)


def test_multiplicative_group_order():
    for a in range(1, GF9.q):
        assert f_pow(a, GF9.q - 1, GF9) == 1


# ============================================================================
# ПРОИЗВЕДЕНИЯ
# ============================================================================

def test_ring_sizes(F2xF3):
    assert len(ring_elements(F2xF3)) == 6
    assert len(ring_units(F2xF3)) == 2
    assert F2xF3.order == 6


def test_ring_operations(F3, F2xF3):
    assert ring_mul((2,), (2,), F3) == (1,)
    assert ring_add((1, 2), (1, 2), F2xF3) == (0, 1)
    assert ring_neg((1, 1), F2xF3) == (1, 2)
    assert ring_zero(F2xF3) == (0, 0)
    assert ring_one(F2xF3) == (1, 1)


RINGS = [[2, 3], [{"p": 2, "k": 2}, 5], [3, 3], [{"p": 3, "k": 2}]]


@pytest.mark.parametrize("factors", RINGS)
def test_units_form_a_group(factors):
    K = ring_from_dict(factors)
    units = set(ring_units(K))
    one = ring_one(K)
    assert len(units) == np.prod([q - 1 for q in K.orders])
    for x in units:
        assert any(ring_mul(x, y, K) == one for y in units)
        for y in units:
            assert ring_mul(x, y, K) in units


@pytest.mark.parametrize("factors", RINGS)
def test_elements_form_a_commutative_monoid(factors):
    K = ring_from_dict(factors)
    elements = ring_elements(K)
    one = ring_one(K)
    assert one == (1,) * K.m
    for x in elements:
        assert ring_mul(x, one, K) == x
        for y in elements:
            assert ring_mul(x, y, K) == ring_mul(y, x, K)
    for x, y, z in itertools.product(elements[:12], repeat=3):
        assert ring_mul(ring_mul(x, y, K), z, K) == ring_mul(x, ring_mul(y, z, K), K)


def test_element_encoding(F2xF3):
    assert encode_element((1, 2), F2xF3) == 5
    assert [decode_element(encode_element(x, F2xF3), F2xF3) for x in ring_elements(F2xF3)] \
        == ring_elements(F2xF3)


def test_ring_from_dict_forms():
    assert ring_from_dict([2, 3]).orders == (2, 3)
    assert ring_from_dict({"p": 5}).orders == (5,)
    assert ring_from_dict(7).orders == (7,)
    ring = ring_make([GF9, field_make(2)])
    assert ring_from_dict(ring.to_dict()) == ring
    with pytest.raises(MalformedInput):
        ring_from_dict("F_3")


def test_coprimality(F2, F3, F5, F2xF3):
    assert coprimality_check(F3, F2)
    assert coprimality_check(F2xF3, F5)
    assert not coprimality_check(F2, F2)
    with pytest.raises(NotCoprime) as e:
        require_coprime(F2xF3, F2)
    assert e.value.exit_code == 2


def test_codomain_must_be_prime_fields(F2xF3):
    assert prime_moduli(F2xF3) == (2, 3)
    with pytest.raises(NotPrimeField):
        prime_moduli(ring_make([field_make(2, 2)]))


# ============================================================================
# МАТРИЦЫ
# ============================================================================

def test_matrix_inverse_over_gf4():
    gf4 = field_make(2, 2)
    M = np.array([[2, 1], [1, 1]])
    inv = field_matinv(gf4, M)
    assert np.array_equal(field_matmul(gf4, M, inv), np.eye(2, dtype=np.int64))
    assert field_rank(gf4, M) == 2


def test_singular_matrix():
    gf5 = field_make(5)
    with pytest.raises(ShapeMismatch):
        field_matinv(gf5, [[1, 2], [2, 4]])
    assert field_rank(gf5, [[1, 2], [2, 4]]) == 1


if __name__ == '__main__':
    raise SystemExit(pytest.main([__file__, '-v']))
