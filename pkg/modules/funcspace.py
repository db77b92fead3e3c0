"""
Пространство функций K^n → F: кодирование точек, вычисление,
левая F-модульная структура, подстановка блочных линейных отображений,
ограничение, множества зависимости и оператор обнуления a^(J).

Блоки K = Π K_j нумеруются с 1 (множества I, J, Dep(f) ⊆ [m]).
"""
import itertools
from functools import lru_cache

import numpy as np

from modules.errors import (
    BadArity, BadFactorCount, InvalidElement, MalformedInput, ShapeMismatch, WrongLength,
)
from modules.ffield import (
    check_ring_element, field_matmul, field_matvec, prime_moduli, ring_from_dict, ring_make,
)
from modules.models.function import FiniteFunction


# ============================================================================
# КОДИРОВАНИЕ ТОЧЕК
# ============================================================================

@lru_cache(maxsize=64)
def point_grid(K, n):
    """
    Координаты всех точек K^n в порядке PointIndex.

    Returns:
        массив (|K|^n, n, m): [индекс, аргумент, фактор] -> значение элемента поля
    """
    size = K.order
    idx = np.arange(size ** n, dtype=np.int64)
    codes = np.stack([(idx // size ** (n - 1 - i)) % size for i in range(n)], axis=1)
    grid = K.element_coords[codes]
    grid.setflags(write=False)
    return grid


def encode_grid(K, coords):
    """Векторное кодирование: массив (..., n, m) -> индексы (...)"""
    coords = np.asarray(coords, dtype=np.int64)
    n = coords.shape[-2]
    weights = np.asarray(K.weights, dtype=np.int64)
    element_codes = coords @ weights
    arg_weights = K.order ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return element_codes @ arg_weights


def encode_point(x, K):
    """
    PointIndex точки (x_1,…,x_n): Σ_i E(x_i)·|K|^{n−i}, первый аргумент - старший разряд.
    """
    if len(x) == 0:
        raise WrongLength("a point needs at least one argument")
    index = 0
    for element in x:
        if len(element) != K.m:
            raise WrongLength(f"element {element!r} has {len(element)} coordinates, expected {K.m}")
        element = check_ring_element(element, K)
        index = index * K.order + sum(a * w for a, w in zip(element, K.weights))
    return index


def decode_point(index, K, n):
    if not 0 <= index < K.order ** n:
        raise InvalidElement(f"point index {index} out of range for arity {n}")
    return tuple(tuple(int(c) for c in row) for row in point_grid(K, n)[index])


# ============================================================================
# КОНСТРУКТОРЫ
# ============================================================================

def integer_array(values, what):
    """Массив целых без молчаливого усечения: 0.9 или true - ошибка, а не 0 или 1"""
    try:
        array = np.asarray(values)
    except ValueError as e:
        raise ShapeMismatch(f"{what} is not a rectangular array: {e}")
    if array.size == 0:
        return array.astype(np.int64)
    if array.dtype.kind not in 'iu':
        raise InvalidElement(f"{what} must contain integers, got dtype {array.dtype}")
    return array.astype(np.int64)


def make_function(domain, codomain, arity, table):
    """Функция по таблице значений (форма (|K|^n, s) или (|K|^n,) при s = 1)"""
    moduli = np.asarray(prime_moduli(codomain), dtype=np.int64)
    if arity < 1:
        raise BadArity(f"arity must be positive, got {arity}")
    table = integer_array(table, "function table")
    if table.ndim == 1 and codomain.m == 1:
        table = table.reshape(-1, 1)
    if table.shape != (domain.order ** arity, codomain.m):
        raise WrongLength(f"table shape {table.shape} != {(domain.order ** arity, codomain.m)}")
    if (table < 0).any() or (table >= moduli).any():
        raise InvalidElement("table entries must be valid elements of the codomain")
    return FiniteFunction(domain=domain, codomain=codomain, arity=arity, table=table)


def function_from_dict(data):
    try:
        domain = ring_from_dict(data["domain"])
        codomain = ring_from_dict(data["codomain"])
        return make_function(domain, codomain, int(data["arity"]), data["table"])
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"bad function description: {e}")


def zero_function(domain, codomain, arity):
    prime_moduli(codomain)
    return FiniteFunction(domain, codomain, arity, np.zeros((domain.order ** arity, codomain.m), dtype=np.int64))


def constant_function(domain, codomain, arity, value):
    value = check_ring_element(value, codomain)
    prime_moduli(codomain)
    table = np.tile(np.asarray(value, dtype=np.int64), (domain.order ** arity, 1))
    return FiniteFunction(domain, codomain, arity, table)


def function_from_callable(domain, codomain, arity, fn):
    """Табулировать fn(x) по всем точкам; fn получает кортеж элементов K"""
    grid = point_grid(domain, arity)
    rows = []
    for point in grid:
        value = fn(tuple(tuple(int(c) for c in element) for element in point))
        rows.append(check_ring_element(value, codomain))
    return make_function(domain, codomain, arity, rows)


def indicator(domain, codomain, points, arity=1, value=None):
    """Функция, равная value (по умолчанию 1_F) в указанных точках и 0 вне их"""
    value = value if value is not None else (1,) * codomain.m
    table = np.zeros((domain.order ** arity, codomain.m), dtype=np.int64)
    for point in points:
        table[encode_point(point, domain)] = value
    return make_function(domain, codomain, arity, table)


# ============================================================================
# ВЫЧИСЛЕНИЕ И ЛИНЕЙНАЯ СТРУКТУРА
# ============================================================================

def evaluate(f, x):
    """f(x) по таблице"""
    if len(x) != f.arity:
        raise WrongLength(f"expected {f.arity} arguments, got {len(x)}")
    return tuple(int(v) for v in f.table[encode_point(x, f.domain)])


def _require_same_shape(f, g):
    if not f.same_shape(g):
        raise ShapeMismatch(f"{f!r} and {g!r} have different shapes")


def f_scale(a, f):
    """Произведение Адамара a·f (a ∈ F)"""
    a = np.asarray(check_ring_element(a, f.codomain), dtype=np.int64)
    return FiniteFunction(f.domain, f.codomain, f.arity, (f.table * a) % f.codomain.moduli)


def f_plus(f, g):
    _require_same_shape(f, g)
    return FiniteFunction(f.domain, f.codomain, f.arity, (f.table + g.table) % f.codomain.moduli)


def f_neg(f):
    return FiniteFunction(f.domain, f.codomain, f.arity, (-f.table) % f.codomain.moduli)


def f_minus(f, g):
    return f_plus(f, f_neg(g))


def linear_combination(coeffs, functions):
    """Σ a_i·f_i"""
    functions = list(functions)
    if not functions:
        raise ShapeMismatch("linear combination of no functions")
    acc = np.zeros_like(functions[0].table)
    for a, f in zip(coeffs, functions):
        _require_same_shape(functions[0], f)
        acc = acc + f.table * np.asarray(check_ring_element(a, f.codomain), dtype=np.int64)
    f0 = functions[0]
    return FiniteFunction(f0.domain, f0.codomain, f0.arity, acc % f0.codomain.moduli)


# ============================================================================
# ПОДСТАНОВКА
# ============================================================================

def _check_matrices(K, mats, n):
    if len(mats) != K.m:
        raise ShapeMismatch(f"expected {K.m} matrices (one per factor), got {len(mats)}")
    arrays = []
    width = None
    for spec, A in zip(K.factors, mats):
        A = integer_array(A, "substitution matrix")
        if A.ndim != 2 or A.shape[0] != n:
            raise ShapeMismatch(f"matrix of shape {A.shape} does not have {n} rows")
        if width is None:
            width = A.shape[1]
        if A.shape[1] != width or width < 1:
            raise ShapeMismatch("all matrices must have the same positive number of columns")
        if (A < 0).any() or (A >= spec.q).any():
            raise ShapeMismatch(f"matrix entries must be elements of {spec!r}")
        arrays.append(A)
    return arrays, width


def substitution_indices(K, mats, n):
    """
    Для каждой точки x ∈ K^l - индекс точки (A_1x_1^t,…,A_mx_m^t) ∈ K^n.
    """
    arrays, l = _check_matrices(K, mats, n)
    grid = point_grid(K, l)
    image = np.empty((grid.shape[0], n, K.m), dtype=np.int64)
    for j, (spec, A) in enumerate(zip(K.factors, arrays)):
        image[:, :, j] = field_matvec(spec, A, grid[:, :, j])
    return encode_grid(K, image), l


def substitute(f, mats):
    """
    g(x_1,…,x_m) = f(A_1·x_1^t,…,A_m·x_m^t), A_j ∈ K_j^{n×l}; x_j ∈ K_j^l - j-й
    координатный столбец l аргументов.
    """
    index, l = substitution_indices(f.domain, mats, f.arity)
    return FiniteFunction(f.domain, f.codomain, l, f.table[index])


def identity_matrices(K, n):
    return [np.eye(n, dtype=np.int64) for _ in K.factors]


def zero_matrices(K, n, l):
    return [np.zeros((n, l), dtype=np.int64) for _ in K.factors]


def compose_matrices(K, A, B):
    """Блочное произведение A·B (подстановка B после A)"""
    return [field_matmul(spec, a, b) for spec, a, b in zip(K.factors, A, B)]


# ============================================================================
# ЗАВИСИМОСТЬ, ОБНУЛЕНИЕ, ОГРАНИЧЕНИЕ
# ============================================================================

def subsets(m):
    """Все подмножества [m] (1-индексация) по возрастанию мощности"""
    items = range(1, m + 1)
    return [frozenset(c) for r in range(m + 1) for c in itertools.combinations(items, r)]


@lru_cache(maxsize=256)
def mask_indices(K, n, J):
    """Индекс x^(J) для каждого индекса x ∈ K^n"""
    J = frozenset(J)
    keep = np.array([1 if j + 1 in J else 0 for j in range(K.m)], dtype=np.int64)
    masked = point_grid(K, n) * keep
    index = encode_grid(K, masked)
    index.setflags(write=False)
    return index


def zero_mask(x, J, K):
    """x^(J): координаты блоков из J сохраняются, остальные обнуляются во всех аргументах"""
    J = frozenset(J)
    return tuple(
        tuple(a if j + 1 in J else 0 for j, a in enumerate(check_ring_element(element, K)))
        for element in x
    )


def dep_set(f):
    """Dep(f): блоки i, от которых f существенно зависит"""
    m = f.domain.m
    result = set()
    for i in range(1, m + 1):
        others = frozenset(range(1, m + 1)) - {i}
        if (f.table != f.table[mask_indices(f.domain, f.arity, others)]).any():
            result.add(i)
    return frozenset(result)


def is_zero_preserving(f):
    """f(0,…,0) = 0"""
    return not f.table[0].any()


def restrict(f, h):
    """
    f|_{K_1}(x_1,…,x_h) = f(x_1,…,x_h,0,…,0), K_1 = Π_{i≤h} K_i.
    """
    K = f.domain
    if not 1 <= h <= K.m:
        raise BadFactorCount(f"h must lie in [1, {K.m}], got {h}")
    if h == K.m:
        return f
    K1 = ring_make(K.factors[:h])
    grid = point_grid(K1, f.arity)
    padded = np.zeros(grid.shape[:2] + (K.m,), dtype=np.int64)
    padded[:, :, :h] = grid
    return FiniteFunction(K1, f.codomain, f.arity, f.table[encode_grid(K, padded)])


def extend_trailing(f, K):
    """
    Продолжение функции над K_1 = Π_{i≤h} на K: значение не зависит от блоков h+1..m.
    """
    h = f.domain.m
    if K.factors[:h] != f.domain.factors:
        raise BadFactorCount(f"{f.domain!r} is not a leading factor block of {K!r}")
    grid = point_grid(K, f.arity)
    return FiniteFunction(K, f.codomain, f.arity, f.table[encode_grid(f.domain, grid[:, :, :h])])
