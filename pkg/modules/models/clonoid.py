"""
Модели срезов клоноидов и вспомогательных объектов
"""
from dataclasses import dataclass

import numpy as np

from modules.models.function import FiniteFunction


@dataclass(frozen=True)
class AbsorbingComponent:
    """Слагаемое f_I разложения: 0-поглощающее в I"""
    I: frozenset
    f_I: FiniteFunction

    def to_dict(self):
        return {"I": sorted(self.I), "function": self.f_I.to_dict()}


@dataclass(frozen=True)
class ClonoidSlice:
    """
    C^{[k]}: по одной канонической базе на каждый простой фактор F,
    размерность объемлющего пространства |K|^k.
    """
    K: object
    F: object
    arity: int
    parts: tuple    # SubspaceBasis на каждый p_i

    @property
    def ranks(self):
        return [part.rank for part in self.parts]

    def basis_functions(self):
        """
        Функции, F-линейно порождающие срез: вектор базы i-й компоненты,
        вложенный в i-ю координату F (остальные координаты нулевые).
        """
        functions = []
        size = self.K.order ** self.arity
        for i, part in enumerate(self.parts):
            for row in part.rows:
                table = np.zeros((size, self.F.m), dtype=np.int64)
                table[:, i] = row
                functions.append(FiniteFunction(self.K, self.F, self.arity, table))
        return functions

    def __eq__(self, other):
        if not isinstance(other, ClonoidSlice):
            return NotImplemented
        return (self.K == other.K and self.F == other.F and self.arity == other.arity
                and self.parts == other.parts)

    def __hash__(self):
        return hash((self.K, self.F, self.arity, self.parts))

    def to_dict(self):
        return {
            "K": self.K.to_dict(),
            "F": self.F.to_dict(),
            "arity": self.arity,
            "ranks": self.ranks,
            "parts": [part.to_dict() for part in self.parts],
        }


@dataclass(frozen=True)
class LineProduct:
    """
    Произведение прямых {(λ_1 l_1,…,λ_m l_m)}: l_j ∈ F_{q_j}^n ненулевой,
    первая ненулевая координата равна 1.
    """
    generators: tuple   # по кортежу длины n на фактор

    @property
    def arity(self):
        return len(self.generators[0])

    def to_dict(self):
        return {"generators": [list(g) for g in self.generators]}


@dataclass(frozen=True)
class UnaryVerdict:
    """Сравнение C^{[k]} и Clg(C^{[1]})^{[k]}"""
    k: int
    rank_C: list
    rank_unary: list
    equal: bool

    def to_dict(self):
        return {"k": self.k, "rank_C": list(self.rank_C), "rank_unary": list(self.rank_unary),
                "equal": self.equal}


@dataclass(frozen=True)
class LineWitness:
    """Свидетель для одной прямой: f_L = substitute(t_n(g_L), matrices)"""
    line: LineProduct
    g: FiniteFunction
    matrices: tuple

    def to_dict(self):
        return {
            "line": self.line.to_dict(),
            "g": self.g.to_dict(),
            "matrices": [np.asarray(A).tolist() for A in self.matrices],
        }
