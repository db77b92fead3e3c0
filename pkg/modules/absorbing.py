"""
Единственное разложение функции в сумму 0-поглощающих слагаемых:
f = Σ_{I ⊆ [m]} f_I, где f_I 0-поглощающая в I.

Две формулы:
- рекурсивная:  f_I(a) = f(a^(I)) − Σ_{J ⊊ I} f_J(a), f_∅(a) = f(0,…,0)
- включений-исключений: f_I(a) = Σ_{J ⊆ I} (−1)^{|I|+|J|} f(a^(J))
Знаки приводятся в F_p покомпонентно (в характеристике 2 все знаки +).
"""
import itertools
import logging

import numpy as np

from modules.errors import InvalidElement, MalformedInput
from modules.funcspace import dep_set, make_function, mask_indices, subsets
from modules.models.clonoid import AbsorbingComponent
from modules.models.function import FiniteFunction
from modules.models.subspace import SubspaceBasis

logger = logging.getLogger(__name__)

METHODS = ('inclusion-exclusion', 'recursive')


def _as_subset(I, m):
    I = frozenset(I)
    if any(not 1 <= i <= m for i in I):
        raise InvalidElement(f"{sorted(I)} is not a subset of [{m}]")
    return I


def is_absorbing(f, I):
    """
    f 0-поглощающая в I: Dep(f) ⊆ I и для каждого i ∈ I f обращается в 0,
    когда i-й блок нулевой во всех аргументах.
    """
    m = f.domain.m
    I = _as_subset(I, m)
    if not dep_set(f) <= I:
        return False
    everything = frozenset(range(1, m + 1))
    for i in I:
        if f.table[mask_indices(f.domain, f.arity, everything - {i})].any():
            return False
    return True


def component(f, I):
    """f_I по формуле включений-исключений"""
    I = _as_subset(I, f.domain.m)
    acc = np.zeros_like(f.table)
    for r in range(len(I) + 1):
        for J in itertools.combinations(sorted(I), r):
            values = f.table[mask_indices(f.domain, f.arity, frozenset(J))]
            if (len(I) + r) % 2:
                acc -= values
            else:
                acc += values
    return FiniteFunction(f.domain, f.codomain, f.arity, acc % f.codomain.moduli)


def _recursive_components(f):
    parts = {}
    for I in subsets(f.domain.m):
        values = f.table[mask_indices(f.domain, f.arity, I)].copy()
        for J, f_J in parts.items():
            if J < I:
                values -= f_J
        parts[I] = values % f.codomain.moduli
    return parts


def component_recursive(f, I):
    """f_I по рекурсивному определению"""
    I = _as_subset(I, f.domain.m)
    table = _recursive_components(f)[I]
    return FiniteFunction(f.domain, f.codomain, f.arity, table)


def decompose(f, method='inclusion-exclusion'):
    """
    Разложение f = Σ_I f_I.

    Args:
        f: FiniteFunction
        method: 'inclusion-exclusion' или 'recursive'

    Returns:
        list[AbsorbingComponent] - 2^m слагаемых, I по возрастанию мощности
    """
    if method == 'recursive':
        tables = _recursive_components(f)
        result = [AbsorbingComponent(I, FiniteFunction(f.domain, f.codomain, f.arity, tables[I]))
                  for I in subsets(f.domain.m)]
    elif method == 'inclusion-exclusion':
        result = [AbsorbingComponent(I, component(f, I)) for I in subsets(f.domain.m)]
    else:
        raise MalformedInput(f"unknown decomposition method {method!r}")
    logger.debug(f"[ABSORB] разложение на {len(result)} слагаемых ({method})")
    return result


def reconstruct(components):
    """Σ_I f_I"""
    components = list(components)
    first = components[0].f_I
    acc = sum(c.f_I.table for c in components)
    return FiniteFunction(first.domain, first.codomain, first.arity, acc % first.codomain.moduli)


def mask_span(f):
    """
    Покомпонентный span функций x ↦ f(x^(J)), J ⊆ [m] (аддитивная подгруппа
    над простым полем совпадает с F_p-подпространством).
    """
    shifted = [f.table[mask_indices(f.domain, f.arity, J)] for J in subsets(f.domain.m)]
    parts = []
    for i, p in enumerate(f.codomain.moduli.tolist()):
        vectors = np.stack([table[:, i] for table in shifted])
        parts.append(SubspaceBasis.span(p, f.size, vectors))
    return parts


def in_mask_span(f, g):
    """g лежит в span{x ↦ f(x^(J))}"""
    return all(part.contains(g.column(i)) for i, part in enumerate(mask_span(f)))


def absorbing_space(K, F, n, I):
    """
    Все функции K^n → F, 0-поглощающие в I, полным перебором таблиц
    (только для малых экземпляров).
    """
    size = K.order ** n
    values_at_point = list(itertools.product(*(range(p) for p in F.moduli.tolist())))
    result = []
    for values in itertools.product(values_at_point, repeat=size):
        f = make_function(K, F, n, values)
        if is_absorbing(f, I):
            result.append(f)
    return result
