"""
Каноническая база подпространства F_p^d (приведённый ступенчатый вид)
"""
from dataclasses import dataclass

import numpy as np

from modules.errors import ShapeMismatch


def rref(matrix, p):
    """
    Приведённый ступенчатый вид над F_p: ведущий элемент - самый левый,
    нормируется к 1, столбец ведущего элемента обнуляется во всех остальных строках.

    Returns:
        tuple: (ненулевые строки, pivots)
    """
    m = np.array(matrix, dtype=np.int64) % p
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d matrix, got shape {m.shape}")
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        pivot = r + int(nz[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        factors = m[:, c].copy()
        factors[r] = 0
        if factors.any():
            m = (m - np.outer(factors, m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """
    Подпространство F_p^d, заданное канонической базой.
    Две базы равны тогда и только тогда, когда равны подпространства.
    """
    p: int
    dim: int
    rows: np.ndarray
    pivots: tuple

    def __post_init__(self):
        rows = np.array(self.rows, dtype=np.int64).reshape(-1, self.dim)
        rows.setflags(write=False)
        object.__setattr__(self, 'rows', rows)

    # ------------------------------------------------------------------
    # Конструкторы
    # ------------------------------------------------------------------

    @classmethod
    def span(cls, p, dim, vectors=()):
        vectors = np.array(vectors, dtype=np.int64).reshape(-1, dim)
        if vectors.shape[0] == 0:
            return cls.zero(p, dim)
        rows, pivots = rref(np.unique(vectors % p, axis=0), p)
        return cls(p=p, dim=dim, rows=rows, pivots=pivots)

    @classmethod
    def zero(cls, p, dim):
        return cls(p=p, dim=dim, rows=np.zeros((0, dim), dtype=np.int64), pivots=())

    @classmethod
    def full(cls, p, dim):
        return cls(p=p, dim=dim, rows=np.eye(dim, dtype=np.int64), pivots=tuple(range(dim)))

    # ------------------------------------------------------------------

    @property
    def rank(self):
        return self.rows.shape[0]

    def _check(self, other):
        if self.p != other.p or self.dim != other.dim:
            raise ShapeMismatch(f"subspaces of F_{self.p}^{self.dim} and F_{other.p}^{other.dim}")

    def reduce(self, vectors):
        """Остатки векторов (форма (N, d) или (d,)) после редукции по базе"""
        v = np.array(vectors, dtype=np.int64) % self.p
        single = v.ndim == 1
        v = v.reshape(-1, self.dim)
        if v.shape[1] != self.dim:
            raise ShapeMismatch(f"vector length {v.shape[1]} != {self.dim}")
        if self.rank:
            coeffs = v[:, list(self.pivots)]
            v = (v - coeffs @ self.rows) % self.p
        return v[0] if single else v

    def contains(self, vector):
        return not self.reduce(vector).any()

    def contains_all(self, vectors):
        vectors = np.asarray(vectors).reshape(-1, self.dim)
        return vectors.shape[0] == 0 or not self.reduce(vectors).any()

    def issubspace(self, other):
        """self ⊆ other"""
        self._check(other)
        return other.contains_all(self.rows)

    def extend(self, vectors):
        """Подпространство, порождённое базой и новыми векторами"""
        vectors = np.array(vectors, dtype=np.int64).reshape(-1, self.dim) % self.p
        if vectors.shape[0] == 0:
            return self
        residue = self.reduce(vectors)
        residue = residue[residue.any(axis=1)]
        if residue.shape[0] == 0:
            return self
        return SubspaceBasis.span(self.p, self.dim, np.vstack([self.rows, residue]))

    def join(self, other):
        self._check(other)
        return self.extend(other.rows)

    def meet(self, other):
        """Пересечение (алгоритм Цассенхауза)"""
        self._check(other)
        if self.rank == 0 or other.rank == 0:
            return SubspaceBasis.zero(self.p, self.dim)
        d = self.dim
        block = np.vstack([
            np.hstack([self.rows, self.rows]),
            np.hstack([other.rows, np.zeros_like(other.rows)]),
        ])
        reduced, _ = rref(block, self.p)
        tail = reduced[~reduced[:, :d].any(axis=1), d:]
        return SubspaceBasis.span(self.p, d, tail)

    def key(self):
        return (self.p, self.dim, self.rows.tobytes())

    def sort_key(self):
        return (self.rank, self.rows.ravel().tolist())

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_dict(self):
        return {"p": self.p, "dim": self.dim, "rank": self.rank, "basis": self.rows.tolist()}

    def __repr__(self):
        return f"SubspaceBasis(F_{self.p}^{self.dim}, rank={self.rank})"
