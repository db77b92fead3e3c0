"""
Арифметика конечных полей GF(p^k) и их конечных произведений.

Элемент поля - int в [0, q), элемент кольца - кортеж int (по координате на фактор).
"""
import itertools
import logging
from functools import lru_cache
from math import gcd

import numpy as np

from modules.core import get_config
from modules.errors import (
    BadDegree, DivisionByZero, EmptyProduct, FieldTooLarge, InvalidElement,
    MalformedInput, NotCoprime, NotPrime, NotPrimeField, Reducible, ShapeMismatch,
)
from modules.models.field import FieldSpec, ProductRingSpec

logger = logging.getLogger(__name__)


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ============================================================================
# МНОГОЧЛЕНЫ НАД F_p (только для проверки неприводимости)
# ============================================================================

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a, b, p):
    """Остаток от деления a на унитарный b над F_p"""
    a = _poly_trim(a)
    b = _poly_trim(b)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1]
        shift = len(a) - 1 - db
        for t in range(db + 1):
            a[shift + t] = (a[shift + t] - c * b[t]) % p
        a = _poly_trim(a)
    return a


def _monic_polys(p, degree):
    """Все унитарные многочлены степени degree в лексикографическом порядке (свободный член первым)"""
    for coeffs in itertools.product(range(p), repeat=degree):
        yield list(coeffs) + [1]


def is_irreducible(poly, p):
    """Проверка неприводимости пробным делением на все унитарные многочлены степени ≤ k/2"""
    poly = _poly_trim(poly)
    k = len(poly) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for degree in range(1, k // 2 + 1):
        for divisor in _monic_polys(p, degree):
            if not _poly_rem(poly, divisor, p):
                return False
    return True


def least_irreducible(p, k):
    """Лексикографически наименьший унитарный неприводимый многочлен степени k"""
    for candidate in _monic_polys(p, k):
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise Reducible(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


# ============================================================================
# ПОЛЯ
# ============================================================================

@lru_cache(maxsize=None)
def _cached_field(p, k, poly):
    return FieldSpec(p=p, k=k, poly=poly)


def field_make(p, k=1, poly=None):
    """
    Построить поле GF(p^k).

    Args:
        p: характеристика (простое)
        k: степень расширения
        poly: унитарный неприводимый многочлен степени k (свободный член первым);
              если не задан, берётся лексикографически наименьший

    Returns:
        FieldSpec
    """
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise BadDegree(f"extension degree must be a positive integer, got {k}")
    p, k = int(p), int(k)
    if p ** k > get_config().max_field_order:
        raise FieldTooLarge(f"GF({p}^{k}) exceeds the configured maximum field order")

    if poly is None:
        poly = (0, 1) if k == 1 else least_irreducible(p, k)
    else:
        poly = tuple(int(c) for c in poly)
        if len(poly) != k + 1 or poly[-1] != 1:
            raise BadDegree(f"poly must be monic of degree {k}")
        if any(c < 0 or c >= p for c in poly):
            raise BadDegree(f"poly coefficients must lie in [0, {p})")
        if k > 1 and not is_irreducible(poly, p):
            raise Reducible(f"{list(poly)} is reducible over F_{p}")
        if k == 1:
            # каноническая форма простого поля: x
            poly = (0, 1)
    return _cached_field(p, k, poly)


def field_from_dict(data):
    try:
        return field_make(int(data["p"]), int(data.get("k", 1)), data.get("poly"))
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInput(f"bad field description {data!r}: {e}")


def check_element(a, spec):
    if not isinstance(a, (int, np.integer)) or not 0 <= a < spec.q:
        raise InvalidElement(f"{a!r} is not an element of {spec!r}")
    return int(a)


def f_add(a, b, spec):
    return int(spec.add_table[check_element(a, spec), check_element(b, spec)])


def f_mul(a, b, spec):
    return int(spec.mul_table[check_element(a, spec), check_element(b, spec)])


def f_neg(a, spec):
    return int(spec.neg_table[check_element(a, spec)])


def f_sub(a, b, spec):
    return f_add(a, f_neg(b, spec), spec)


def f_inv(a, spec):
    if check_element(a, spec) == 0:
        raise DivisionByZero(f"0 has no inverse in {spec!r}")
    return int(spec.inv_table[a])


def f_pow(a, e, spec):
    result = 1
    base = check_element(a, spec)
    while e:
        if e & 1:
            result = int(spec.mul_table[result, base])
        base = int(spec.mul_table[base, base])
        e >>= 1
    return result


# ============================================================================
# ПРОИЗВЕДЕНИЯ ПОЛЕЙ
# ============================================================================

def ring_make(factors):
    """Построить K = Π F_{q_j}"""
    factors = tuple(factors)
    if not factors:
        raise EmptyProduct("a product ring needs at least one factor")
    return ProductRingSpec(factors=factors)


def ring_from_dict(data):
    """Разобрать кольцо: {"factors": [...]}, одно поле {"p":..} или список полей/простых"""
    if isinstance(data, dict) and "factors" in data:
        items = data["factors"]
    elif isinstance(data, dict):
        items = [data]
    elif isinstance(data, (list, tuple)):
        items = data
    elif isinstance(data, int):
        items = [data]
    else:
        raise MalformedInput(f"bad ring description {data!r}")
    if not isinstance(items, (list, tuple)):
        raise MalformedInput(f"bad factor list {items!r}")
    fields = [field_make(item) if isinstance(item, int) else field_from_dict(item) for item in items]
    return ring_make(fields)


def check_ring_element(x, spec):
    if len(x) != spec.m:
        raise InvalidElement(f"{x!r} has {len(x)} coordinates, expected {spec.m}")
    return tuple(check_element(a, f) for a, f in zip(x, spec.factors))


def ring_add(x, y, spec):
    x, y = check_ring_element(x, spec), check_ring_element(y, spec)
    return tuple(int(f.add_table[a, b]) for a, b, f in zip(x, y, spec.factors))


def ring_mul(x, y, spec):
    x, y = check_ring_element(x, spec), check_ring_element(y, spec)
    return tuple(int(f.mul_table[a, b]) for a, b, f in zip(x, y, spec.factors))


def ring_neg(x, spec):
    x = check_ring_element(x, spec)
    return tuple(int(f.neg_table[a]) for a, f in zip(x, spec.factors))


def ring_zero(spec):
    return (0,) * spec.m


def ring_one(spec):
    return (1,) * spec.m


def ring_elements(spec):
    """Все элементы в каноническом порядке кодирования (старший фактор первым)"""
    return list(itertools.product(*(range(q) for q in spec.orders)))


def ring_units(spec):
    """Элементы с ненулевыми координатами"""
    return list(itertools.product(*(range(1, q) for q in spec.orders)))


def encode_element(x, spec):
    """E(x) = Σ_j val(a_j)·Π_{j'>j} q_{j'}"""
    x = check_ring_element(x, spec)
    return sum(a * w for a, w in zip(x, spec.weights))


def decode_element(code, spec):
    if not 0 <= code < spec.order:
        raise InvalidElement(f"element code {code} out of range for {spec!r}")
    return tuple(int(c) for c in spec.element_coords[code])


def prime_moduli(F):
    """Простые p_i кодомена F = Π F_{p_i}"""
    for f in F.factors:
        if not f.is_prime_field:
            raise NotPrimeField(f"codomain factor {f!r} is not a prime field")
    return tuple(f.p for f in F.factors)


def coprimality_check(K, F):
    """gcd(|K|, |F|) = 1"""
    return gcd(K.order, F.order) == 1


def require_coprime(K, F):
    if not coprimality_check(K, F):
        logger.warning(f"[FFIELD] |K|={K.order} и |F|={F.order} не взаимно просты")
        raise NotCoprime(f"|K| = {K.order} and |F| = {F.order} are not coprime")


# ============================================================================
# ЛИНЕЙНАЯ АЛГЕБРА НАД GF(q) (малые матрицы)
# ============================================================================

def field_matvec(spec, A, X):
    """
    Y = X · A^t для пакета векторов.

    Args:
        A: матрица (r, c) над spec
        X: массив (N, c) значений элементов

    Returns:
        массив (N, r)
    """
    A = np.asarray(A, dtype=np.int64)
    if A.ndim != 2 or A.shape[1] != X.shape[1]:
        raise ShapeMismatch(f"matrix of shape {A.shape} cannot act on vectors of length {X.shape[1]}")
    if spec.is_prime_field:
        return (X @ A.T) % spec.p
    out = np.zeros((X.shape[0], A.shape[0]), dtype=np.int64)
    for r in range(A.shape[0]):
        acc = np.zeros(X.shape[0], dtype=np.int64)
        for c in range(A.shape[1]):
            acc = spec.add_table[acc, spec.mul_table[A[r, c], X[:, c]]]
        out[:, r] = acc
    return out


def field_matmul(spec, A, B):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ShapeMismatch(f"cannot multiply {A.shape} by {B.shape}")
    return field_matvec(spec, A, B.T).T.copy()


def _row_reduce(spec, M):
    """Приведение к ступенчатому виду над GF(q); возвращает (матрица, pivots)"""
    M = [list(map(int, row)) for row in M]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c]), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = int(spec.inv_table[M[r][c]])
        M[r] = [int(spec.mul_table[inv, v]) for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                factor = M[i][c]
                M[i] = [int(spec.add_table[v, spec.neg_table[spec.mul_table[factor, w]]])
                        for v, w in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def field_rank(spec, M):
    if len(M) == 0:
        return 0
    return len(_row_reduce(spec, M)[1])


def field_matinv(spec, M):
    """Обратная матрица над GF(q)"""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ShapeMismatch("only square matrices are invertible")
    augmented = [list(map(int, row)) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    reduced, pivots = _row_reduce(spec, augmented)
    if pivots[:n] != list(range(n)):
        raise ShapeMismatch("matrix is singular")
    return np.array([row[n:] for row in reduced[:n]], dtype=np.int64)
