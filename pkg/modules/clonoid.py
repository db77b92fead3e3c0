"""
Клоноиды, замкнутые относительно (F,K)-линейных операций, по арностям:
замыкание Clg(S)^{[k]} как подпространство F^{K^k}, принадлежность,
t_k / r_k, разложение по произведениям прямых и перенос прямой,
проверка порождённости унарной частью.
"""
import itertools
import logging
from math import prod

import numpy as np

from modules.absorbing import is_absorbing
from modules.core import get_config
from modules.errors import (
    BadArity, BudgetExceeded, MixedDomains, NotAbsorbing, NotSupportedOnLines, ShapeMismatch,
    ValueMismatch,
)
from modules.ffield import field_matinv, field_matvec, field_rank, prime_moduli, require_coprime
from modules.funcspace import (
    dep_set, encode_grid, point_grid, restrict, substitute,
)
from modules.models.clonoid import ClonoidSlice, LineProduct, LineWitness, UnaryVerdict
from modules.models.function import FiniteFunction
from modules.models.subspace import SubspaceBasis

logger = logging.getLogger(__name__)


# ============================================================================
# ЗАМЫКАНИЕ
# ============================================================================

def _shared_rings(generators, domain, codomain):
    """(K, F) генераторов; пустой набор требует явных domain/codomain"""
    if generators:
        domain = domain or generators[0].domain
        codomain = codomain or generators[0].codomain
    if domain is None or codomain is None:
        raise ShapeMismatch("domain and codomain are required for an empty generator set")
    for g in generators:
        if g.domain != domain or g.codomain != codomain:
            raise ShapeMismatch(f"generator {g!r} does not map {domain!r} → {codomain!r}")
    return domain, codomain


def _check_budget(K, k, budget):
    budget = budget or get_config().budget
    if K.order ** k > budget:
        raise BudgetExceeded(f"|K|^{k} = {K.order ** k} exceeds the budget {budget}")


def _row_forms(K, k):
    """
    Для каждого фактора j: массив (q_j^k, |K|^k) значений <a, x_j>
    по всем строкам a ∈ F_{q_j}^k и точкам x ∈ K^k.
    """
    grid = point_grid(K, k)
    forms = []
    for j, spec in enumerate(K.factors):
        rows = np.array(list(itertools.product(range(spec.q), repeat=k)), dtype=np.int64)
        forms.append(field_matvec(spec, rows, grid[:, :, j]).T.copy())
    return forms


def substitution_batches(K, n, k, chunk=None):
    """
    Индексные массивы всех подстановок (A_1,…,A_m), A_j ∈ F_{q_j}^{n×k},
    пакетами формы (S, |K|^k): строка - f ↦ f(A_1x_1,…,A_mx_m) как выборка из таблицы.

    Индекс образа раскладывается в сумму по парам (аргумент r, фактор j):
    |K|^{n−1−r}·w_j·<A_j[r], x_j>, поэтому выбор строк перебирается внешним
    циклом по префиксу пар и широковещательной суммой по суффиксу.
    """
    chunk = chunk or get_config().subst_chunk
    forms = _row_forms(K, k)
    terms = []
    for r in range(n):
        for j in range(K.m):
            scale = K.order ** (n - 1 - r) * K.weights[j]
            terms.append(forms[j] * scale)

    split = len(terms)
    width = 1
    while split > 0 and width * terms[split - 1].shape[0] <= chunk:
        split -= 1
        width *= terms[split].shape[0]

    suffix = np.zeros((1, K.order ** k), dtype=np.int64)
    for term in terms[split:]:
        suffix = (suffix[:, None, :] + term[None, :, :]).reshape(-1, term.shape[1])

    for choice in itertools.product(*(range(t.shape[0]) for t in terms[:split])):
        offset = sum((t[c] for t, c in zip(terms[:split], choice)), np.zeros(K.order ** k, dtype=np.int64))
        yield suffix + offset


def closure_slice(generators, k, *, domain=None, codomain=None, budget=None):
    """
    Clg(S)^{[k]}: по каждому простому p_i - span над F_{p_i} всех
    substitute(g, (A_1,…,A_m)), g ∈ S, A_j ∈ F_{q_j}^{n×k}.

    Одного прохода достаточно: подстановка в подстановку - снова подстановка
    (произведение матриц), а подстановка перестановочна с линейными
    комбинациями, поэтому span всех подстановок генераторов уже замкнут
    относительно обоих условий на арности k.

    Args:
        generators: последовательность FiniteFunction с общими (K, F)
        k: арность среза
        domain, codomain: K и F (обязательны для пустого набора)
        budget: предел |K|^k (по умолчанию из конфигурации)

    Returns:
        ClonoidSlice
    """
    generators = list(generators)
    K, F = _shared_rings(generators, domain, codomain)
    if k < 1:
        raise BadArity(f"arity must be positive, got {k}")
    require_coprime(K, F)
    moduli = prime_moduli(F)
    _check_budget(K, k, budget)

    size = K.order ** k
    parts = [SubspaceBasis.zero(p, size) for p in moduli]
    seen = set()
    for g in generators:
        if g.key() in seen:
            continue
        seen.add(g.key())
        for index in substitution_batches(K, g.arity, k):
            values = g.table[index]
            for i in range(len(moduli)):
                if parts[i].rank < size:
                    parts[i] = parts[i].extend(np.unique(values[:, :, i], axis=0))
            if all(part.rank == size for part in parts):
                break

    result = ClonoidSlice(K=K, F=F, arity=k, parts=tuple(parts))
    logger.debug(f"[CLOSURE] {len(generators)} генераторов, k={k}: ранги {result.ranks}")
    return result


def member(f, slice_):
    """f ∈ C^{[k]}: каждая компонента f редуцируется в ноль"""
    if f.domain != slice_.K or f.codomain != slice_.F or f.arity != slice_.arity:
        raise ShapeMismatch(f"{f!r} does not live in the slice of arity {slice_.arity}")
    return all(part.contains(f.column(i)) for i, part in enumerate(slice_.parts))


def is_closed(slice_):
    """Срез замкнут относительно всех подстановок арности k"""
    closure = closure_slice(slice_.basis_functions(), slice_.arity, domain=slice_.K, codomain=slice_.F)
    return closure == slice_


# ============================================================================
# ПРЯМЫЕ
# ============================================================================

def _normalized_vectors(q, n):
    """Ненулевые векторы F_q^n с первой ненулевой координатой 1"""
    result = []
    for v in itertools.product(range(q), repeat=n):
        nz = next((c for c in v if c), 0)
        if nz == 1:
            result.append(v)
    return result


def lines_enumerate(K, n):
    """
    Все произведения прямых в K^n: Π_j (q_j^n − 1)/(q_j − 1) представителей.
    """
    if n < 1:
        raise BadArity(f"arity must be positive, got {n}")
    per_factor = [_normalized_vectors(spec.q, n) for spec in K.factors]
    return [LineProduct(generators=tuple(choice)) for choice in itertools.product(*per_factor)]


def line_point_indices(K, line):
    """Индексы точек (λ_1l_1,…,λ_ml_m) в порядке кода λ ∈ K"""
    lam = K.element_coords
    image = np.stack([
        spec.mul_table[lam[:, j][:, None], np.asarray(l, dtype=np.int64)[None, :]]
        for j, (spec, l) in enumerate(zip(K.factors, line.generators))
    ], axis=2)
    return encode_grid(K, image)


def e1_line(K, n):
    return LineProduct(generators=tuple((1,) + (0,) * (n - 1) for _ in K.factors))


def line_component(f, line):
    """f_L: совпадает с f на произведении прямых L и равна 0 вне его"""
    index = line_point_indices(f.domain, line)
    table = np.zeros_like(f.table)
    table[index] = f.table[index]
    return FiniteFunction(f.domain, f.codomain, f.arity, table)


def _supported_on(f, index):
    outside = np.ones(f.size, dtype=bool)
    outside[index] = False
    return not f.table[outside].any()


def _complete_basis(spec, b):
    """Матрица со столбцами b, e_i… (жадное дополнение до базиса)"""
    n = len(b)
    columns = [list(b)]
    for i in range(n):
        if len(columns) == n:
            break
        candidate = [1 if r == i else 0 for r in range(n)]
        if field_rank(spec, columns + [candidate]) == len(columns) + 1:
            columns.append(candidate)
    return np.array(columns, dtype=np.int64).T


def line_transport(f, g, line):
    """
    Матрицы A_j с A_j·b_j = e_1 и substitute(g, (A_1,…,A_m)) = f.

    Args:
        f: функция с носителем на произведении прямых line
        g: функция с носителем на прямых e_1 и теми же значениями

    Returns:
        list[np.ndarray] - обратимые матрицы n×n
    """
    K, n = f.domain, f.arity
    if not f.same_shape(g):
        raise ShapeMismatch(f"{f!r} and {g!r} have different shapes")
    if line.arity != n:
        raise ShapeMismatch(f"line of arity {line.arity} for a function of arity {n}")
    f_index = line_point_indices(K, line)
    g_index = line_point_indices(K, e1_line(K, n))
    if not _supported_on(f, f_index) or not _supported_on(g, g_index):
        raise NotSupportedOnLines("functions must vanish off their line products")
    if not np.array_equal(f.table[f_index], g.table[g_index]):
        raise ValueMismatch("values on the lines do not match")

    matrices = [field_matinv(spec, _complete_basis(spec, b)) for spec, b in zip(K.factors, line.generators)]
    if substitute(g, matrices) != f:
        raise ValueMismatch("line transport did not reproduce the function")
    return matrices


# ============================================================================
# t_k И r_k
# ============================================================================

def _require_absorbing_unary(g):
    if g.arity != 1:
        raise BadArity(f"expected a unary function, got arity {g.arity}")
    if not is_absorbing(g, range(1, g.domain.m + 1)):
        raise NotAbsorbing("g must be 0-absorbing in every block")


def build_t_k(g, k):
    """
    t_k(λ_1e_1,…,λ_me_1) = g(λ_1,…,λ_m), вне прямых e_1 - ноль.
    """
    _require_absorbing_unary(g)
    if k < 1:
        raise BadArity(f"arity must be positive, got {k}")
    K = g.domain
    table = np.zeros((K.order ** k, g.codomain.m), dtype=np.int64)
    table[np.arange(K.order) * K.order ** (k - 1)] = g.table
    return FiniteFunction(K, g.codomain, k, table)


def _line_maps(spec, k):
    """
    Отображения F_q^k → F_q^{k−1} одного фактора со знаковым битом:
    (x_1 − a·x_2, x_3,…,x_k) для всех a и (a·x_2, x_3,…,x_k) для a ≠ 0.
    """
    tail = np.zeros((k - 2, k), dtype=np.int64)
    for r in range(k - 2):
        tail[r, r + 2] = 1
    maps = []
    for a in range(spec.q):
        head = np.zeros((1, k), dtype=np.int64)
        head[0, 0] = 1
        head[0, 1] = int(spec.neg_table[a])
        maps.append((np.vstack([head, tail]), 0))
    for a in range(1, spec.q):
        head = np.zeros((1, k), dtype=np.int64)
        head[0, 1] = a
        maps.append((np.vstack([head, tail]), 1))
    return maps


def build_r_k(g, k):
    """
    r_k = Σ_{h_i ∈ P_i} (−1)^{#R} t_{k−1}(h_1(x_1),…,h_m(x_m)); равна (Π q_i)·t_k.
    """
    _require_absorbing_unary(g)
    if k < 2:
        raise BadArity(f"r_k needs k ≥ 2, got {k}")
    t_prev = build_t_k(g, k - 1)
    moduli = g.codomain.moduli
    acc = np.zeros((g.domain.order ** k, g.codomain.m), dtype=np.int64)
    for choice in itertools.product(*(_line_maps(spec, k) for spec in g.domain.factors)):
        term = substitute(t_prev, [matrix for matrix, _ in choice]).table
        if sum(bit for _, bit in choice) % 2:
            acc -= term
        else:
            acc += term
        acc %= moduli
    return FiniteFunction(g.domain, g.codomain, k, acc)


def r_k_factor(K, F):
    """Π q_i mod p_i для каждой компоненты F"""
    return tuple(prod(K.orders) % p for p in prime_moduli(F))


# ============================================================================
# ПОРОЖДЁННОСТЬ УНАРНОЙ ЧАСТЬЮ
# ============================================================================

def interpolate_on_lines(f):
    """
    Для f, 0-поглощающей в [m]: по каждому произведению прямых L унарная
    g_L(λ) = f(λ_1l_1,…,λ_ml_m) и матрицы A_L, такие что
    Σ_L substitute(t_n(g_L), A_L) = f.

    Returns:
        list[LineWitness]
    """
    K, n = f.domain, f.arity
    if not is_absorbing(f, range(1, K.m + 1)):
        raise NotAbsorbing("f must be 0-absorbing in every block")
    witnesses = []
    for line in lines_enumerate(K, n):
        columns = [np.asarray(l, dtype=np.int64).reshape(n, 1) for l in line.generators]
        g_line = substitute(f, columns)
        matrices = line_transport(line_component(f, line), build_t_k(g_line, n), line)
        witnesses.append(LineWitness(line=line, g=g_line, matrices=tuple(matrices)))
    logger.debug(f"[CLOSURE] интерполяция по {len(witnesses)} произведениям прямых")
    return witnesses


def unary_generation_check(generators, k_max, *, domain=None, codomain=None, budget=None):
    """
    Сравнение Clg(S)^{[k]} и Clg(C^{[1]})^{[k]} для k = 1..k_max.

    Returns:
        list[UnaryVerdict]
    """
    generators = list(generators)
    K, F = _shared_rings(generators, domain, codomain)
    require_coprime(K, F)
    if k_max < 1:
        raise BadArity(f"k_max must be positive, got {k_max}")
    _check_budget(K, k_max, budget)

    unary = closure_slice(generators, 1, domain=K, codomain=F, budget=budget).basis_functions()
    verdicts = []
    for k in range(1, k_max + 1):
        full = closure_slice(generators, k, domain=K, codomain=F, budget=budget)
        from_unary = closure_slice(unary, k, domain=K, codomain=F, budget=budget)
        verdicts.append(UnaryVerdict(k=k, rank_C=full.ranks, rank_unary=from_unary.ranks,
                                     equal=full == from_unary))
    logger.info(f"[CLOSURE] проверка унарной порождённости до k={k_max}: "
                f"{'равны' if all(v.equal for v in verdicts) else 'НЕ равны'}")
    return verdicts


def restriction_check(f, generators):
    """
    Для Dep(f) ⊆ [h]: (f ∈ Clg(C^{[1]})^{[n]}, f|_{K_1} ∈ Clg(C|_{K_1}^{[1]})^{[n]}),
    K_1 = Π_{i≤h} K_i. Оба значения должны совпадать.
    """
    generators = list(generators)
    K, F = _shared_rings(generators, f.domain, f.codomain)
    if K != f.domain or F != f.codomain:
        raise MixedDomains(f"{f!r} and the generators live over different rings")
    dep = dep_set(f)
    h = max(dep) if dep else 1
    unary = closure_slice(generators, 1, domain=K, codomain=F).basis_functions()

    on_K = member(f, closure_slice(unary, f.arity, domain=K, codomain=F))
    f_1 = restrict(f, h)
    restricted = [restrict(u, h) for u in unary]
    on_K1 = member(f_1, closure_slice(restricted, f.arity, domain=f_1.domain, codomain=F))
    logger.debug(f"[CLOSURE] ограничение на {h} блоков: {on_K} / {on_K1}")
    return on_K, on_K1
