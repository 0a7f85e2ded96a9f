"""Vectorized element representations.

Each representation encodes elements as fixed-width integer rows of a numpy
array and multiplies whole batches at once.  ``keys`` maps rows to int64
values whose numeric order is the canonical total order on elements:

* permutations: lexicographic on the image array;
* matrices: lexicographic on row-major entries, entries ordered by code;
* products: lexicographic on component positions in the factor tables.
"""
from __future__ import annotations

import math
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .elements import (ElementError, MatrixElt, Permutation, ProductElt,
                       ProjectiveMatrix, root_of_unity_scalars)
from .field import Field

if TYPE_CHECKING:
    from .table import GroupTable

KEY_LIMIT = 1 << 62


def _broadcast_pair(X: np.ndarray, Y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if X.shape[0] == Y.shape[0]:
        return X, Y
    if X.shape[0] == 1:
        return np.broadcast_to(X, (Y.shape[0],) + X.shape[1:]), Y
    if Y.shape[0] == 1:
        return X, np.broadcast_to(Y, (X.shape[0],) + Y.shape[1:])
    raise ValueError(f"cannot broadcast batches of {X.shape[0]} and {Y.shape[0]}")


class Rep:
    """Common interface; subclasses fill in the arithmetic."""

    kind = "abstract"
    width: int
    dtype: np.dtype

    def identity_row(self) -> np.ndarray:
        raise NotImplementedError

    def mul(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def keys(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def to_element(self, row: np.ndarray):
        raise NotImplementedError

    def from_element(self, x) -> np.ndarray:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def max_order(self) -> int:
        """An upper bound on element orders, for power iteration."""
        raise NotImplementedError

    def is_identity(self, X: np.ndarray) -> np.ndarray:
        return np.all(X == self.identity_row()[None, :], axis=1)

    def inv(self, X: np.ndarray) -> np.ndarray:
        return orders_and_inverses(self, X)[1]

    def rows(self, elements) -> np.ndarray:
        return np.stack([self.from_element(x) for x in elements]).astype(self.dtype)


def orders_and_inverses(rep: Rep, X: np.ndarray, limit: int | None = None):
    """Element orders and inverses by iterating powers: if x^k = 1 then x^-1 = x^(k-1)."""
    n = X.shape[0]
    limit = limit or rep.max_order()
    order = np.zeros(n, dtype=np.int64)
    inv = np.empty_like(X)
    todo = np.arange(n)
    prev = np.broadcast_to(rep.identity_row(), X.shape).copy()  # x^(k-1)
    cur = X.copy()                                               # x^k
    k = 1
    while todo.size:
        if k > limit:
            raise ElementError("element order exceeds the representation's bound")
        done = rep.is_identity(cur)
        order[todo[done]] = k
        inv[todo[done]] = prev[done]
        keep = ~done
        todo, prev = todo[keep], cur[keep]
        if todo.size:
            cur = rep.mul(prev, X[todo])
        k += 1
    return order, inv


class PermRep(Rep):
    kind = "perm"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("degree must be positive")
        self.n = n
        self.width = n
        self.dtype = np.dtype(np.uint8 if n <= 255 else np.uint16)
        if n ** n >= KEY_LIMIT and n > 1:
            self._weights = None
        else:
            self._weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)

    def identity_row(self):
        return np.arange(self.n, dtype=self.dtype)

    def mul(self, X, Y):
        # (xy)(i) = y(x(i))
        if Y.shape[0] == 1:
            return Y[0][X]
        if X.shape[0] == 1:
            return Y[:, X[0]]
        return np.take_along_axis(Y, X.astype(np.intp), axis=1)

    def inv(self, X):
        out = np.empty_like(X)
        rows = np.arange(X.shape[0])[:, None]
        out[rows, X] = np.arange(self.n, dtype=self.dtype)[None, :]
        return out

    def keys(self, X):
        if self._weights is None:
            raise ElementError(f"degree {self.n} is too large for integer keys")
        return X.astype(np.int64) @ self._weights

    def to_element(self, row):
        return Permutation(row.tolist())

    def from_element(self, x):
        if not isinstance(x, Permutation) or x.degree != self.n:
            raise ElementError(f"expected a permutation of degree {self.n}")
        return np.array(x.images, dtype=self.dtype)

    def parse(self, text):
        return Permutation.parse(text, self.n)

    def max_order(self):
        # Landau's function is far below this
        return max(1, math.factorial(self.n)) if self.n <= 12 else 10**9

    def format(self, row):
        return str(self.to_element(row))


class MatRep(Rep):
    kind = "mat"

    def __init__(self, n: int, field: Field):
        self.n = n
        self.field = field
        self.width = n * n
        self.dtype = np.dtype(np.int16)
        q = field.q
        if q ** (n * n) < KEY_LIMIT:
            self._weights = q ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
        else:
            self._weights = None
        if field.f > 1:
            field.build_tables()

    def identity_row(self):
        return np.eye(self.n, dtype=self.dtype).reshape(-1)

    def mul(self, X, Y):
        X, Y = _broadcast_pair(X, Y)
        n, F = self.n, self.field
        A = X.reshape(-1, n, n)
        B = Y.reshape(-1, n, n)
        if F.f == 1:
            C = np.matmul(A.astype(np.int64), B.astype(np.int64)) % F.p
        else:
            terms = F.mul_table[A[:, :, :, None], B[:, None, :, :]]  # (N, i, k, j)
            if F.p == 2:
                C = np.bitwise_xor.reduce(terms, axis=2)
            else:
                add = F.add_table
                C = terms[:, :, 0, :]
                for k in range(1, n):
                    C = add[C, terms[:, :, k, :]]
        return C.reshape(-1, n * n).astype(self.dtype)

    def scale(self, lam: int, X):
        F = self.field
        if F.f == 1:
            return (X.astype(np.int64) * lam % F.p).astype(self.dtype)
        return F.mul_table[lam][X].astype(self.dtype)

    def keys(self, X):
        if self._weights is None:
            raise ElementError(f"{self.n}x{self.n} matrices over {self.field} are too large for integer keys")
        return X.astype(np.int64) @ self._weights

    def det(self, X):
        """Determinants for n <= 3 (closed forms); used for SL membership checks."""
        F, n = self.field, self.n
        M = X.reshape(-1, n, n).astype(np.int64)
        if F.f == 1:
            if n == 1:
                return M[:, 0, 0] % F.p
            if n == 2:
                return (M[:, 0, 0] * M[:, 1, 1] - M[:, 0, 1] * M[:, 1, 0]) % F.p
        return np.array([MatrixElt(F, n, r.tolist()).det() for r in X], dtype=np.int64)

    def to_element(self, row):
        return MatrixElt(self.field, self.n, row.tolist())

    def from_element(self, x):
        if isinstance(x, ProjectiveMatrix):
            x = x.rep
        if not isinstance(x, MatrixElt) or x.n != self.n or x.field != self.field:
            raise ElementError(f"expected a {self.n}x{self.n} matrix over {self.field}")
        return np.array(x.entries, dtype=self.dtype)

    def parse(self, text):
        return MatrixElt.parse(text, self.field, self.n)

    def max_order(self):
        return self.field.q ** self.n

    def format(self, row):
        return str(self.to_element(row))


class ProjRep(Rep):
    """Matrices modulo scalars lambda*I with lambda^n = 1; rows are canonical reps."""

    kind = "proj"

    def __init__(self, n: int, field: Field):
        self.mat = MatRep(n, field)
        self.n = n
        self.field = field
        self.width = self.mat.width
        self.dtype = self.mat.dtype
        self.scalars = root_of_unity_scalars(field, n)

    def canon(self, X):
        if len(self.scalars) == 1:
            return X
        cands = np.stack([self.mat.scale(l, X) for l in self.scalars])  # (S, N, w)
        k = np.stack([self.mat.keys(c) for c in cands])
        best = np.argmin(k, axis=0)
        return cands[best, np.arange(X.shape[0])]

    def identity_row(self):
        return self.canon(self.mat.identity_row()[None, :])[0]

    def mul(self, X, Y):
        return self.canon(self.mat.mul(X, Y))

    def keys(self, X):
        return self.mat.keys(X)

    def to_element(self, row):
        return ProjectiveMatrix(self.mat.to_element(row), self.scalars)

    def from_element(self, x):
        if isinstance(x, MatrixElt):
            x = ProjectiveMatrix(x, self.scalars)
        return self.mat.from_element(x.rep)

    def parse(self, text):
        return ProjectiveMatrix(self.mat.parse(text), self.scalars)

    def max_order(self):
        return self.mat.max_order()

    def format(self, row):
        return str(self.to_element(row))


def split_top_level(text: str, sep: str) -> list[str]:
    """Split on ``sep`` outside any bracket pair."""
    depth, cur, out = 0, [], []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


class ProductRep(Rep):
    """Direct product of enumerated factors; a row holds one index per factor."""

    kind = "prod"

    def __init__(self, factors: Sequence["GroupTable"]):
        self.factors = list(factors)
        self.width = len(self.factors)
        self.dtype = np.dtype(np.int64)
        sizes = [len(f) for f in self.factors]
        if math.prod(sizes) >= KEY_LIMIT:
            raise ElementError("direct product too large for integer keys")
        w = []
        acc = 1
        for s in reversed(sizes):
            w.append(acc)
            acc *= s
        self._weights = np.array(list(reversed(w)), dtype=np.int64)

    def identity_row(self):
        return np.array([f.identity for f in self.factors], dtype=self.dtype)

    def mul(self, X, Y):
        X, Y = _broadcast_pair(X, Y)
        return np.stack([f.mul(X[:, i], Y[:, i]) for i, f in enumerate(self.factors)],
                        axis=1).astype(self.dtype)

    def inv(self, X):
        return np.stack([f.inv_index[X[:, i]] for i, f in enumerate(self.factors)],
                        axis=1).astype(self.dtype)

    def keys(self, X):
        return X.astype(np.int64) @ self._weights

    def to_element(self, row):
        return ProductElt([f.element(int(i)) for f, i in zip(self.factors, row)])

    def from_element(self, x):
        if not isinstance(x, ProductElt) or len(x.components) != len(self.factors):
            raise ElementError(f"expected a {len(self.factors)}-component product element")
        return np.array([f.index_of(c) for f, c in zip(self.factors, x.components)],
                        dtype=self.dtype)

    def parse(self, text):
        t = text.strip()
        if not (t.startswith("{") and t.endswith("}")):
            raise ElementError(f"product elements are written {{x | y}}, got {text!r}")
        parts = split_top_level(t[1:-1], "|")
        if len(parts) != len(self.factors):
            raise ElementError(f"expected {len(self.factors)} components")
        return ProductElt([f.rep.parse(p) for f, p in zip(self.factors, parts)])

    def max_order(self):
        return math.prod(f.exponent for f in self.factors)

    def format(self, row):
        return str(self.to_element(row))
