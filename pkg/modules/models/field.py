"""
Модели конечных полей GF(p^k) и их конечных произведений
"""
from dataclasses import dataclass
from functools import cached_property
from math import prod

import numpy as np


@dataclass(frozen=True)
class FieldSpec:
    """
    Поле GF(p^k).

    Элемент хранится как int в [0, q): цифры в системе счисления p, младшая
    первой, - коэффициенты многочлена (свободный член - младший разряд).
    poly - неприводимый унитарный многочлен степени k, свободный член первым.
    """
    p: int
    k: int
    poly: tuple

    @property
    def q(self):
        return self.p ** self.k

    @property
    def is_prime_field(self):
        return self.k == 1

    def digits(self, value):
        """Коэффициенты элемента (свободный член первым)"""
        out = []
        for _ in range(self.k):
            out.append(value % self.p)
            value //= self.p
        return out

    def from_digits(self, coeffs):
        value = 0
        for c in reversed(coeffs):
            value = value * self.p + c
        return value

    # Таблицы операций строятся один раз на спецификацию.
    @cached_property
    def add_table(self):
        q, p = self.q, self.p
        if self.k == 1:
            r = np.arange(q, dtype=np.int64)
            return (r[:, None] + r[None, :]) % p
        digits = np.array([self.digits(v) for v in range(q)], dtype=np.int64)
        summed = (digits[:, None, :] + digits[None, :, :]) % p
        weights = p ** np.arange(self.k, dtype=np.int64)
        return summed @ weights

    @cached_property
    def mul_table(self):
        q, p = self.q, self.p
        if self.k == 1:
            r = np.arange(q, dtype=np.int64)
            return (r[:, None] * r[None, :]) % p
        table = np.zeros((q, q), dtype=np.int64)
        digits = [self.digits(v) for v in range(q)]
        for a in range(q):
            for b in range(a, q):
                c = self.from_digits(_poly_mulmod(digits[a], digits[b], self.poly, p))
                table[a, b] = table[b, a] = c
        return table

    @cached_property
    def neg_table(self):
        if self.k == 1:
            return (-np.arange(self.q, dtype=np.int64)) % self.p
        return np.array([self.from_digits([(-c) % self.p for c in self.digits(v)])
                         for v in range(self.q)], dtype=np.int64)

    @cached_property
    def inv_table(self):
        """inv_table[0] = 0 (не используется)"""
        inv = np.zeros(self.q, dtype=np.int64)
        ones = np.argwhere(self.mul_table == 1)
        for a, b in ones:
            inv[a] = b
        return inv

    def to_dict(self):
        return {"p": self.p, "k": self.k, "poly": list(self.poly)}

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}; {list(self.poly)})"


@dataclass(frozen=True)
class ProductRingSpec:
    """K = Π F_{q_j} (или F = Π F_{p_i} для кодомена)"""
    factors: tuple

    @property
    def m(self):
        return len(self.factors)

    @property
    def orders(self):
        return tuple(f.q for f in self.factors)

    @property
    def order(self):
        return prod(self.orders)

    @cached_property
    def weights(self):
        """Вес разряда каждого фактора: Π_{j'>j} q_{j'} (старший фактор первым)"""
        w = []
        acc = 1
        for q in reversed(self.orders):
            w.append(acc)
            acc *= q
        return tuple(reversed(w))

    @cached_property
    def element_coords(self):
        """Матрица (|K|, m): координаты элемента по его коду"""
        codes = np.arange(self.order, dtype=np.int64)
        cols = [(codes // w) % q for w, q in zip(self.weights, self.orders)]
        return np.stack(cols, axis=1) if cols else np.zeros((1, 0), dtype=np.int64)

    @cached_property
    def moduli(self):
        """Характеристики факторов как массив (для покомпонентной арифметики кодомена)"""
        return np.array([f.p for f in self.factors], dtype=np.int64)

    def to_dict(self):
        return {"factors": [f.to_dict() for f in self.factors]}

    def __repr__(self):
        return " × ".join(repr(f) for f in self.factors)


def _poly_mulmod(a, b, poly, p):
    """Произведение многочленов по модулю унитарного poly над F_p"""
    k = len(poly) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for deg in range(len(res) - 1, k - 1, -1):
        c = res[deg]
        if c:
            for t in range(k + 1):
                res[deg - k + t] = (res[deg - k + t] - c * poly[t]) % p
    return (res + [0] * k)[:k]
