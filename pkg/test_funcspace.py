#!/usr/bin/env python3
"""
Тесты пространства функций: кодирование точек, линейная структура,
подстановка, множества зависимости, маски, ограничение
"""
import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from modules.absorbing import decompose
from modules.errors import BadFactorCount, InvalidElement, ShapeMismatch, WrongLength
from modules.ffield import field_make, ring_elements, ring_make
from modules.funcspace import (
    compose_matrices, constant_function, decode_point, dep_set, encode_point, evaluate,
    extend_trailing, f_minus, f_neg, f_plus, f_scale, function_from_callable, function_from_dict,
    identity_matrices, indicator, is_zero_preserving, linear_combination, make_function,
    restrict, subsets, substitute, zero_function, zero_mask, zero_matrices,
)

K3 = ring_make([field_make(3)])
K23 = ring_make([field_make(2), field_make(3)])
K232 = ring_make([field_make(2), field_make(3), field_make(2)])
F2 = ring_make([field_make(2)])
F5 = ring_make([field_make(5)])
F2xF5 = ring_make([field_make(2), field_make(5)])


def random_function(rng, K, F, n):
    table = rng.integers(0, F.moduli, size=(K.order ** n, F.m))
    return make_function(K, F, n, table)


def random_matrices(rng, K, n, l):
    return [rng.integers(0, spec.q, size=(n, l)) for spec in K.factors]


# ============================================================================
# КОДИРОВАНИЕ
# ============================================================================

def test_encode_point_examples():
    assert encode_point(((1,), (2,)), K3) == 5
    assert encode_point(((1, 2),), K23) == 5


def test_decode_inverts_encode_exhaustively():
    for n in (1, 2):
        for x in itertools.product(ring_elements(K23), repeat=n):
            assert decode_point(encode_point(x, K23), K23, n) == x


def test_bad_points():
    with pytest.raises(WrongLength):
        encode_point((), K3)
    with pytest.raises(WrongLength):
        encode_point(((1,),), K23)
    with pytest.raises(InvalidElement):
        encode_point(((3,),), K3)
    with pytest.raises(InvalidElement):
        decode_point(9, K3, 2)


# ============================================================================
# КОНСТРУКТОРЫ И ВЫЧИСЛЕНИЕ
# ============================================================================

def test_evaluate_indicator():
    delta0 = indicator(K3, F2, [((0,),)])
    assert evaluate(delta0, ((0,),)) == (1,)
    assert evaluate(delta0, ((2,),)) == (0,)
    assert evaluate(zero_function(K23, F2xF5, 2), ((1, 1), (0, 2))) == (0, 0)


def test_function_from_callable_matches_table():
    f = function_from_callable(K23, F5, 1, lambda x: ((x[0][0] + x[0][1]) % 5,))
    assert f.table[:, 0].tolist() == [0, 1, 2, 1, 2, 3]


def test_make_function_validation():
    with pytest.raises(WrongLength):
        make_function(K3, F2, 1, [0, 1])
    with pytest.raises(InvalidElement):
        make_function(K3, F2, 1, [0, 1, 2])


def test_make_function_rejects_non_integer_entries():
    with pytest.raises(InvalidElement):
        make_function(K3, F2, 1, [0.9, 1.7, 0.2])
    with pytest.raises(InvalidElement):
        make_function(K3, F2, 1, [True, False, True])
    with pytest.raises(InvalidElement):
        make_function(K3, F2, 1, ['0', '1', '1'])
    with pytest.raises(ShapeMismatch):
        make_function(K23, F2xF5, 1, [[0, 1], [1]] * 3)
    with pytest.raises(InvalidElement):
        function_from_dict({"domain": [3], "codomain": [2], "arity": 1, "table": [0, 1.0, 1]})
    assert make_function(K3, F2, 1, np.array([0, 1, 1], dtype=np.uint8)).table[:, 0].tolist() == [0, 1, 1]


def test_function_dict_roundtrip():
    f = random_function(np.random.default_rng(1), K23, F2xF5, 2)
    assert function_from_dict(f.to_dict()) == f


def test_table_is_read_only():
    f = constant_function(K3, F2, 1, (1,))
    with pytest.raises(ValueError):
        f.table[0, 0] = 0


# ============================================================================
# ЛИНЕЙНАЯ СТРУКТУРА
# ============================================================================

def test_scaling_by_one_and_zero():
    f = random_function(np.random.default_rng(2), K23, F2xF5, 1)
    assert f_scale((1, 1), f) == f
    assert f_scale((0, 0), f).is_zero()


@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 1), st.integers(0, 4))
def test_hadamard_scaling_distributes(seed, a, b):
    rng = np.random.default_rng(seed)
    f = random_function(rng, K3, F2xF5, 1)
    g = random_function(rng, K3, F2xF5, 1)
    assert f_scale((a, b), f_plus(f, g)) == f_plus(f_scale((a, b), f), f_scale((a, b), g))


def test_negation_and_combination():
    rng = np.random.default_rng(3)
    f = random_function(rng, K23, F5, 1)
    g = random_function(rng, K23, F5, 1)
    assert f_plus(f, f_neg(f)).is_zero()
    assert f_minus(f, g) == linear_combination([(1,), (4,)], [f, g])
    with pytest.raises(ShapeMismatch):
        f_plus(f, random_function(rng, K23, F5, 2))


# ============================================================================
# ПОДСТАНОВКА
# ============================================================================

def test_identity_substitution():
    f = random_function(np.random.default_rng(4), K23, F5, 2)
    assert substitute(f, identity_matrices(K23, 2)) == f


def test_zero_substitution_gives_value_at_origin():
    f = random_function(np.random.default_rng(5), K23, F5, 2)
    g = substitute(f, zero_matrices(K23, 2, 3))
    assert g.arity == 3
    assert g == constant_function(K23, F5, 3, tuple(int(v) for v in f.table[0]))


def test_substitution_composes():
    rng = np.random.default_rng(6)
    gf4 = ring_make([field_make(2, 2)])
    for K in (K23, gf4):
        f = random_function(rng, K, F5, 2)
        A = random_matrices(rng, K, 2, 3)
        B = random_matrices(rng, K, 3, 2)
        assert substitute(substitute(f, A), B) == substitute(f, compose_matrices(K, A, B))


def test_substitution_shape_errors():
    f = random_function(np.random.default_rng(7), K23, F5, 2)
    with pytest.raises(ShapeMismatch):
        substitute(f, identity_matrices(K3, 2))
    with pytest.raises(ShapeMismatch):
        substitute(f, [np.eye(3, dtype=np.int64)] * 2)
    with pytest.raises(InvalidElement):
        substitute(f, [np.eye(2) * 1.0, np.eye(2, dtype=np.int64)])


@given(st.integers(0, 2 ** 32 - 1), st.integers(0, 1), st.integers(0, 4), st.integers(0, 1), st.integers(0, 4))
def test_substitution_is_linear(seed, a2, a5, b2, b5):
    rng = np.random.default_rng(seed)
    f = random_function(rng, K23, F2xF5, 2)
    g = random_function(rng, K23, F2xF5, 2)
    A = random_matrices(rng, K23, 2, 3)
    a, b = (a2, a5), (b2, b5)
    left = substitute(linear_combination([a, b], [f, g]), A)
    right = linear_combination([a, b], [substitute(f, A), substitute(g, A)])
    assert left == right
    assert substitute(f_plus(f, g), A) == f_plus(substitute(f, A), substitute(g, A))
    assert substitute(f_scale(a, f), A) == f_scale(a, substitute(f, A))


def test_selector_substitution_keeps_dependence_inside_selection():
    rng = np.random.default_rng(9)
    full = random_function(rng, K232, F5, 2)
    leading = extend_trailing(restrict(full, 2), K232)
    assert dep_set(leading) <= frozenset({1, 2})
    for f in (full, leading):
        for S in subsets(K232.m):
            mats = [np.eye(2, dtype=np.int64) if j in S else np.zeros((2, 2), dtype=np.int64)
                    for j in range(1, K232.m + 1)]
            assert dep_set(substitute(f, mats)) <= dep_set(f) & S
        for _ in range(10):
            picks = [rng.integers(-1, 3, size=2) for _ in K232.factors]
            mats = []
            for pick in picks:
                A = np.zeros((2, 3), dtype=np.int64)
                for row, column in enumerate(pick):
                    if column >= 0:
                        A[row, column] = 1
                mats.append(A)
            selected = frozenset(j for j, A in enumerate(mats, start=1) if A.any())
            assert dep_set(substitute(f, mats)) <= dep_set(f) & selected


# ============================================================================
# ЗАВИСИМОСТЬ, МАСКИ, ОГРАНИЧЕНИЕ
# ============================================================================

def test_dep_set_examples():
    assert dep_set(constant_function(K23, F5, 2, (3,))) == frozenset()
    first_is_zero = function_from_callable(K23, F5, 1, lambda x: (int(x[0][0] == 0),))
    assert dep_set(first_is_zero) == frozenset({1})
    assert dep_set(indicator(K3, F2, [((0,),)])) == frozenset({1})


def test_zero_mask_examples():
    x = ((1, 2),)
    assert zero_mask(x, {1, 2}, K23) == x
    assert zero_mask(x, set(), K23) == ((0, 0),)
    assert zero_mask(x, {2}, K23) == ((0, 2),)


def test_restriction_and_extension():
    rng = np.random.default_rng(8)
    f = random_function(rng, K23, F5, 2)
    assert restrict(f, 2) == f
    g = restrict(f, 1)
    assert g.domain.orders == (2,)
    for x in itertools.product(ring_elements(g.domain), repeat=2):
        padded = tuple(element + (0,) for element in x)
        assert evaluate(g, x) == evaluate(f, padded)

    lifted = extend_trailing(g, K23)
    assert dep_set(lifted) <= frozenset({1})
    assert restrict(lifted, 1) == g
    with pytest.raises(BadFactorCount):
        restrict(f, 3)


@pytest.mark.parametrize("h", [1, 2, 3])
def test_restriction_commutes_with_components(h):
    f = random_function(np.random.default_rng(10 + h), K232, F5, 2)
    restricted = {c.I: c.f_I for c in decompose(restrict(f, h))}
    leading = frozenset(range(1, h + 1))
    for c in decompose(f):
        image = restrict(c.f_I, h)
        if c.I <= leading:
            assert restricted[c.I] == image
        else:
            assert image.is_zero()
    assert set(restricted) == set(subsets(h))


def test_zero_preserving():
    assert is_zero_preserving(indicator(K3, F2, [((1,),)]))
    assert not is_zero_preserving(constant_function(K3, F2, 1, (1,)))


if __name__ == '__main__':
    raise SystemExit(pytest.main([__file__, '-v']))
