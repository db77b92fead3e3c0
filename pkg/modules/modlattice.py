"""
Действие K^× на F_p^K, перечисление подмодулей F_p[K^×], решётка подмодулей,
сборка решётки клоноидов как прямого произведения по простым F,
гауссовы биномиальные коэффициенты и оценка числа клоноидов.
"""
import itertools
import logging

import numpy as np

from modules.core import get_config
from modules.errors import (
    BadArity, BadRange, BudgetExceeded, MixedDomains, NotInvariant, StrategyMismatch,
)
from modules.ffield import field_make, is_prime, prime_moduli, require_coprime, ring_elements, ring_make
from modules.models.lattice import (
    ActionMatrix, GaussianBinomial, ProductLattice, Submodule, SubmoduleLattice,
)
from modules.models.subspace import SubspaceBasis

logger = logging.getLogger(__name__)


# ============================================================================
# ДЕЙСТВИЕ
# ============================================================================

def mult_indices(K, a):
    """Код a·x для каждого кода x ∈ K"""
    coords = K.element_coords
    image = np.stack([spec.mul_table[int(a_j), coords[:, j]] for j, (spec, a_j) in enumerate(zip(K.factors, a))],
                     axis=1)
    return image @ np.asarray(K.weights, dtype=np.int64)


def action_matrix(a, K, p):
    """(τ_a ∗ f)(x) = f(ax)"""
    size = K.order
    matrix = np.zeros((size, size), dtype=np.int64)
    matrix[np.arange(size), mult_indices(K, a)] = 1
    return ActionMatrix(a=tuple(a), p=p, matrix=matrix)


def _all_mult_indices(K):
    return np.stack([mult_indices(K, a) for a in ring_elements(K)])


def cyclic_submodule(v, K, p):
    """Наименьший подмодуль, содержащий v: span орбиты {τ_a ∗ v}"""
    v = np.asarray(v, dtype=np.int64) % p
    return Submodule(SubspaceBasis.span(p, K.order, v[_all_mult_indices(K)]))


def is_invariant(basis, K):
    """Подпространство переходит в себя под всеми τ_a"""
    if basis.rank == 0:
        return True
    return all(basis.contains_all(basis.rows[:, index]) for index in _all_mult_indices(K))


def zero_preserving_submodule(p, K):
    """Функции с f(0) = 0"""
    return Submodule(SubspaceBasis.span(p, K.order, np.eye(K.order, dtype=np.int64)[1:]))


def constants_submodule(p, K):
    return Submodule(SubspaceBasis.span(p, K.order, np.ones((1, K.order), dtype=np.int64)))


def sub_meet(U, V):
    return Submodule(U.basis.meet(V.basis))


def sub_join(U, V):
    # сумма инвариантных подпространств инвариантна: τ_a(u + v) = τ_a u + τ_a v
    return Submodule(U.basis.join(V.basis))


# ============================================================================
# ГАУССОВЫ БИНОМИАЛЬНЫЕ КОЭФФИЦИЕНТЫ
# ============================================================================

def gaussian_binomial(n, k, q):
    """
    C(n, k)_q = Π_{i=1}^k (q^{n−k+i} − 1)/(q^i − 1) - число k-мерных подпространств F_q^n.
    """
    if not 0 <= k <= n or q < 2:
        raise BadRange(f"gaussian binomial needs 0 <= k <= n and q >= 2, got n={n}, k={k}, q={q}")
    numerator = 1
    denominator = 1
    for i in range(1, k + 1):
        numerator *= q ** (n - k + i) - 1
        denominator *= q ** i - 1
    return GaussianBinomial(n=n, k=k, q=q, value=numerator // denominator)


def enumerate_subspaces(p, d):
    """
    Все подпространства F_p^d как канонические базы: по рангу, затем по
    позициям ведущих элементов, затем по свободным элементам.
    """
    for r in range(d + 1):
        for pivots in itertools.combinations(range(d), r):
            free = [(i, c) for i, pivot in enumerate(pivots) for c in range(pivot + 1, d) if c not in pivots]
            for values in itertools.product(range(p), repeat=len(free)):
                rows = np.zeros((r, d), dtype=np.int64)
                for i, pivot in enumerate(pivots):
                    rows[i, pivot] = 1
                for (i, c), value in zip(free, values):
                    rows[i, c] = value
                yield SubspaceBasis(p=p, dim=d, rows=rows, pivots=pivots)


def count_subspaces(n, k, q):
    """Полный перебор k-мерных подпространств F_q^n (q простое)"""
    if not is_prime(q):
        raise BadRange(f"brute-force subspace count needs a prime q, got {q}")
    if not 0 <= k <= n:
        raise BadRange(f"need 0 <= k <= n, got n={n}, k={k}")
    return sum(1 for basis in enumerate_subspaces(q, n) if basis.rank == k)


def clonoid_count_bound(F, K):
    """
    Π_i Σ_{1≤r≤n} C(n, r)_{p_i}, n = |K|.
    Сумма начинается с r = 1; нулевой подмодуль в неё не входит.
    """
    require_coprime(K, F)
    n = K.order
    bound = 1
    for p in prime_moduli(F):
        bound *= sum(gaussian_binomial(n, r, p).value for r in range(1, n + 1))
    return bound


# ============================================================================
# ПЕРЕЧИСЛЕНИЕ ПОДМОДУЛЕЙ
# ============================================================================

def _join_closure(p, K, budget):
    """Все циклические подмодули, затем замыкание относительно сумм"""
    d = K.order
    if p ** d > budget:
        raise BudgetExceeded(f"{p}^{d} seed vectors exceed the enumeration budget {budget}")
    vectors = np.array(list(itertools.product(range(p), repeat=d)), dtype=np.int64)
    index = _all_mult_indices(K)
    cyclic = set()
    for v in vectors:
        cyclic.add(SubspaceBasis.span(p, d, v[index]))
    cyclic = sorted(cyclic, key=SubspaceBasis.sort_key)
    logger.debug(f"[ENUM] p={p}, |K|={d}: {len(cyclic)} циклических подмодулей")

    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        fresh = set()
        for S in frontier:
            for C in cyclic:
                joined = S.join(C)
                if joined not in found:
                    fresh.add(joined)
        found |= fresh
        frontier = list(fresh)
    return found


def _brute_force(p, K, budget):
    """Все подпространства F_p^{|K|}, отфильтрованные по инвариантности"""
    d = K.order
    total = sum(gaussian_binomial(d, r, p).value for r in range(d + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} subspaces of F_{p}^{d} exceed the enumeration budget {budget}")
    return {basis for basis in enumerate_subspaces(p, d) if is_invariant(basis, K)}


def _covers(elements):
    """Пары (i, j): e_i ⊊ e_j без промежуточных элементов"""
    size = len(elements)
    less = np.zeros((size, size), dtype=np.int64)
    for i, j in itertools.permutations(range(size), 2):
        if elements[i].rank < elements[j].rank and elements[i].issubspace(elements[j]):
            less[i, j] = 1
    covers = (less > 0) & ~((less @ less) > 0)
    return tuple((int(i), int(j)) for i, j in zip(*np.nonzero(covers)))


def enumerate_submodules(p, K, strategy=None, budget=None):
    """
    Все F_p[K^×]-подмодули F_p^{|K|}.

    Args:
        p: простое, взаимно простое с |K|
        K: ProductRingSpec
        strategy: 'join-closure', 'brute-force' или 'both' (сверка)
        budget: предел числа затравочных векторов / подпространств

    Returns:
        SubmoduleLattice
    """
    cfg = get_config()
    strategy = strategy or cfg.strategy
    budget = budget or cfg.enum_budget
    require_coprime(K, ring_make([field_make(p)]))

    if strategy == 'join-closure':
        found = _join_closure(p, K, budget)
    elif strategy == 'brute-force':
        found = _brute_force(p, K, budget)
    elif strategy == 'both':
        found = _join_closure(p, K, budget)
        checked = _brute_force(p, K, budget)
        if found != checked:
            raise StrategyMismatch(f"join-closure found {len(found)} submodules, brute force {len(checked)}")
    else:
        raise BadRange(f"unknown strategy {strategy!r}")

    bases = sorted(found, key=SubspaceBasis.sort_key)
    lattice = SubmoduleLattice(p=p, K=K, elements=tuple(Submodule(b) for b in bases), covers=_covers(bases))
    logger.info(f"[ENUM] p={p}, K={K!r}: {len(lattice)} подмодулей ({strategy})")
    return lattice


def clonoid_count(F, K, strategy=None, budget=None):
    """Точное число клоноидов: Π_i |L(F_{p_i}, K)|"""
    require_coprime(K, F)
    count = 1
    for p in prime_moduli(F):
        count *= len(enumerate_submodules(p, K, strategy, budget))
    return count


# ============================================================================
# ПРОИЗВЕДЕНИЕ И ОТПЕЧАТКИ
# ============================================================================

def lattice_assemble(parts):
    """Решётка клоноидов для F = Π F_{p_i} как произведение решёток по p_i"""
    parts = tuple(parts)
    if not parts:
        raise MixedDomains("nothing to assemble")
    K = parts[0].K
    if any(part.K != K for part in parts):
        raise MixedDomains("all lattices must be over the same K")
    F = ring_make([field_make(part.p) for part in parts])
    product = ProductLattice(K=K, F=F, parts=parts)
    logger.info(f"[LATTICE] {' × '.join(str(len(part)) for part in parts)} = {product.size}")
    return product


def unary_fingerprint(slice_):
    """Унарная часть клоноида как кортеж подмодулей (по простым F)"""
    if slice_.arity != 1:
        raise BadArity(f"fingerprints are taken at arity 1, got {slice_.arity}")
    result = []
    for basis in slice_.parts:
        if not is_invariant(basis, slice_.K):
            raise NotInvariant(f"unary part over F_{basis.p} is not closed under the K^× action")
        result.append(Submodule(basis))
    return tuple(result)
