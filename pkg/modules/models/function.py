"""
Модель конечной функции f: K^n → F, заданной плотной таблицей
"""
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class FiniteFunction:
    """
    Таблица функции K^n → F.

    table имеет форму (|K|^n, s): строка - значение в точке с данным PointIndex,
    столбец i - координата в F_{p_i}. Массив только для чтения.
    """
    domain: object      # ProductRingSpec
    codomain: object    # ProductRingSpec
    arity: int
    table: np.ndarray

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        table.setflags(write=False)
        object.__setattr__(self, 'table', table)

    @property
    def size(self):
        return self.table.shape[0]

    def column(self, i):
        """Компонента π_i ∘ f как вектор над F_{p_i}"""
        return self.table[:, i]

    def same_shape(self, other):
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.arity == other.arity)

    def is_zero(self):
        return not self.table.any()

    def key(self):
        """Байтовый ключ для дедупликации"""
        return self.table.tobytes()

    def __eq__(self, other):
        if not isinstance(other, FiniteFunction):
            return NotImplemented
        return self.same_shape(other) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.arity, self.key()))

    def to_dict(self):
        return {
            "domain": self.domain.to_dict(),
            "codomain": self.codomain.to_dict(),
            "arity": self.arity,
            "table": self.table.tolist(),
        }

    def __repr__(self):
        return f"FiniteFunction({self.domain!r} → {self.codomain!r}, arity={self.arity})"
