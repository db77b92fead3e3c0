"""
Модели решёток подмодулей F_p[K^×] и их прямого произведения
"""
import itertools
from dataclasses import dataclass

import numpy as np

from modules.errors import ShapeMismatch
from modules.models.clonoid import ClonoidSlice
from modules.models.subspace import SubspaceBasis


@dataclass(frozen=True, eq=False)
class ActionMatrix:
    """Матрица f ↦ τ_a ∗ f: строка x, столбец y, 1 iff a·x = y"""
    a: tuple
    p: int
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.int64)
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    def apply(self, vectors):
        return (np.asarray(vectors, dtype=np.int64) @ self.matrix.T) % self.p

    def to_dict(self):
        return {"a": list(self.a), "p": self.p, "matrix": self.matrix.tolist()}


@dataclass(frozen=True)
class Submodule:
    """Инвариантное подпространство F_p^{|K|}"""
    basis: SubspaceBasis

    @property
    def p(self):
        return self.basis.p

    @property
    def rank(self):
        return self.basis.rank

    def __le__(self, other):
        return self.basis.issubspace(other.basis)

    def sort_key(self):
        return self.basis.sort_key()

    def to_dict(self):
        return {"rank": self.rank, "basis": self.basis.rows.tolist()}


@dataclass(frozen=True)
class GaussianBinomial:
    n: int
    k: int
    q: int
    value: int

    def to_dict(self):
        return {"n": self.n, "k": self.k, "q": self.q, "value": self.value}


@dataclass(frozen=True)
class SubmoduleLattice:
    """
    Все подмодули F_p^{|K|}: элементы отсортированы по (ранг, база),
    covers - пары индексов (нижний, верхний) отношения покрытия.
    """
    p: int
    K: object
    elements: tuple
    covers: tuple

    def __len__(self):
        return len(self.elements)

    @property
    def bottom(self):
        return self.elements[0]

    @property
    def top(self):
        return self.elements[-1]

    def index_of(self, submodule):
        try:
            return self.elements.index(submodule)
        except ValueError:
            raise KeyError(f"{submodule!r} is not an element of the lattice")

    def meet(self, i, j):
        """Индекс пересечения элементов i и j"""
        return self.index_of(Submodule(self.elements[i].basis.meet(self.elements[j].basis)))

    def join(self, i, j):
        """Индекс суммы элементов i и j"""
        return self.index_of(Submodule(self.elements[i].basis.join(self.elements[j].basis)))

    def to_dict(self):
        return {
            "p": self.p,
            "K": self.K.to_dict(),
            "size": len(self.elements),
            "elements": [e.to_dict() for e in self.elements],
            "covers": [list(pair) for pair in self.covers],
        }

    def to_dot(self, name='lattice'):
        """Диаграмма Хассе в формате DOT (снизу вверх)"""
        lines = [f'digraph {name} {{', '    rankdir=BT;', '    node [shape=box];']
        for i, element in enumerate(self.elements):
            lines.append(f'    n{i} [label="{i}: rank {element.rank}"];')
        for lower, upper in self.covers:
            lines.append(f'    n{lower} -> n{upper};')
        lines.append('}')
        return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class ProductLattice:
    """
    Прямое произведение решёток L(F_{p_i}, K); элемент - кортеж индексов,
    порядок покомпонентный.
    """
    K: object
    F: object
    parts: tuple

    @property
    def size(self):
        size = 1
        for part in self.parts:
            size *= len(part)
        return size

    def elements(self):
        return itertools.product(*(range(len(part)) for part in self.parts))

    def rho(self, slice_):
        """Унарная часть клоноида -> кортеж индексов подмодулей"""
        if slice_.arity != 1 or len(slice_.parts) != len(self.parts):
            raise ShapeMismatch("rho expects a unary slice with one part per prime")
        return tuple(part.index_of(Submodule(basis)) for part, basis in zip(self.parts, slice_.parts))

    def psi(self, indices):
        """Кортеж индексов -> унарная часть клоноида со значениями в F"""
        bases = tuple(part.elements[i].basis for part, i in zip(self.parts, indices))
        return ClonoidSlice(K=self.K, F=self.F, arity=1, parts=bases)

    def leq(self, a, b):
        return all(part.elements[i] <= part.elements[j] for part, i, j in zip(self.parts, a, b))

    def meet(self, a, b):
        return tuple(part.meet(i, j) for part, i, j in zip(self.parts, a, b))

    def join(self, a, b):
        return tuple(part.join(i, j) for part, i, j in zip(self.parts, a, b))

    def to_dict(self):
        return {
            "K": self.K.to_dict(),
            "F": self.F.to_dict(),
            "size": self.size,
            "factor_sizes": [len(part) for part in self.parts],
            "parts": [part.to_dict() for part in self.parts],
        }
