"""Scalar group elements.

These are the slow, obviously-correct objects used for I/O, for the
per-element oracles and for anything that touches one element at a time.
Bulk work over whole groups goes through :mod:`thetaorbits.reps` instead.

Products act on the right: ``(x * y)`` means "apply x, then y", so that
``x ** y`` style conjugation ``x^y = y^-1 x y`` and the commutator
``[x, y] = x^-1 y^-1 x y`` follow the usual right-action conventions.
"""
from __future__ import annotations

import math
import re
from functools import total_ordering
from typing import Sequence, Union

from .field import Field, FieldElement


class ElementError(ValueError):
    pass


@total_ordering
class Permutation:
    """Bijection of {0..n-1}, stored as its image list."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ElementError(f"{images} is not a permutation")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], n: int) -> "Permutation":
        """Build from 1-based cycles on {1..n}."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n:
                    raise ElementError(f"point {a} outside 1..{n}")
                if a in seen:
                    raise ElementError(f"point {a} repeated in cycle notation")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Cycle notation, 1-based: ``(1,2)(3,4)`` or ``(1 2)(3 4)``; ``()`` is 1."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\)\s*)+", text):
            raise ElementError(f"bad cycle notation {text!r}")
        cycles = [[int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
                  for body in re.findall(r"\(([^)]*)\)", text)]
        top = max((a for c in cycles for a in c), default=0)
        if n is None:
            n = top
        elif top > n:
            raise ElementError(f"point {top} exceeds degree {n}")
        return cls.from_cycles([c for c in cycles if c], n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ElementError("degree mismatch")
        oi = other.images
        return Permutation([oi[i] for i in self.images])

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def one(self) -> "Permutation":
        return Permutation.identity(self.degree)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.images[i]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def sort_key(self):
        return self.images

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "()"

    def __repr__(self):
        return f"Permutation{str(self)}"


@total_ordering
class MatrixElt:
    """Invertible n x n matrix over a finite field, entries stored as codes."""

    __slots__ = ("field", "n", "entries")

    def __init__(self, field: Field, n: int, entries: Sequence):
        entries = tuple(e.value if isinstance(e, FieldElement) else int(e) for e in entries)
        if len(entries) != n * n:
            raise ElementError(f"expected {n * n} entries, got {len(entries)}")
        self.field = field
        self.n = n
        self.entries = entries

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "MatrixElt":
        n = len(rows)
        flat = []
        for r in rows:
            if len(r) != n:
                raise ElementError("matrix must be square")
            for e in r:
                flat.append(field(e).value if not isinstance(e, FieldElement) else e.value)
        return cls(field, n, flat)

    @classmethod
    def identity(cls, field: Field, n: int) -> "MatrixElt":
        return cls(field, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def parse(cls, text: str, field: Field, n: int | None = None) -> "MatrixElt":
        """``[[a,b],[c,d]]`` or ``a,b;c,d`` with field elements in text form."""
        t = text.strip()
        if t.startswith("[["):
            body = t[2:-2] if t.endswith("]]") else None
            if body is None:
                raise ElementError(f"bad matrix literal {text!r}")
            rows = [r.split(",") for r in re.split(r"\]\s*,\s*\[", body)]
        else:
            rows = [r.split(",") for r in t.split(";")]
        rows = [[field.parse(e) for e in r] for r in rows]
        m = cls.from_rows(field, rows)
        if n is not None and m.n != n:
            raise ElementError(f"expected a {n}x{n} matrix")
        if m.det() == 0:
            raise ElementError("matrix is singular")
        return m

    def at(self, i: int, j: int) -> FieldElement:
        """Entry in row i, column j (0-based)."""
        return FieldElement(self.field, self.entries[i * self.n + j])

    def rows(self) -> list[list[FieldElement]]:
        return [[self.at(i, j) for j in range(self.n)] for i in range(self.n)]

    def __mul__(self, other: "MatrixElt") -> "MatrixElt":
        if not isinstance(other, MatrixElt):
            return NotImplemented
        if other.n != self.n or other.field != self.field:
            raise ElementError("matrix dimension or field mismatch")
        F, n = self.field, self.n
        a, b = self.entries, other.entries
        add, mul = F.add, F.mul
        out = []
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(n):
                    x, y = a[i * n + k], b[k * n + j]
                    if x and y:
                        acc = add(acc, mul(x, y))
                out.append(acc)
        return MatrixElt(F, n, out)

    def scale(self, lam: int) -> "MatrixElt":
        mul = self.field.mul
        return MatrixElt(self.field, self.n, [mul(lam, e) for e in self.entries])

    def det(self) -> int:
        F, n = self.field, self.n
        m = [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]
        d = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = F.neg(d)
            d = F.mul(d, m[c][c])
            ic = F.inv(m[c][c])
            for r in range(c + 1, n):
                if m[r][c]:
                    f = F.mul(m[r][c], ic)
                    m[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[r], m[c])]
        return d

    def inverse(self) -> "MatrixElt":
        F, n = self.field, self.n
        m = [list(self.entries[i * n:(i + 1) * n]) + [1 if i == j else 0 for j in range(n)]
             for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                raise ElementError("matrix is singular")
            m[c], m[piv] = m[piv], m[c]
            ic = F.inv(m[c][c])
            m[c] = [F.mul(ic, x) for x in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[r], m[c])]
        return MatrixElt(F, n, [x for row in m for x in row[n:]])

    def is_identity(self) -> bool:
        n = self.n
        return all(e == (1 if i // n == i % n else 0) for i, e in enumerate(self.entries))

    def one(self) -> "MatrixElt":
        return MatrixElt.identity(self.field, self.n)

    def sort_key(self):
        return self.entries

    def __eq__(self, other):
        return (isinstance(other, MatrixElt) and self.n == other.n
                and self.field == other.field and self.entries == other.entries)

    def __lt__(self, other):
        return self.entries < other.entries

    def __hash__(self):
        return hash((self.n, self.entries))

    def __str__(self):
        fmt = self.field.format
        n = self.n
        return "[" + ",".join(
            "[" + ",".join(fmt(self.entries[i * n + j]) for j in range(n)) + "]"
            for i in range(n)) + "]"

    __repr__ = __str__


def root_of_unity_scalars(field: Field, n: int) -> tuple[int, ...]:
    """Codes of all lambda with lambda^n = 1, i.e. the scalars of det 1."""
    return tuple(l for l in range(1, field.q) if field.pow(l, n) == 1)


@total_ordering
class ProjectiveMatrix:
    """A matrix modulo the central scalars lambda*I with lambda^n = 1.

    The stored representative is the least scalar multiple under the
    row-major entry order, so equality is equality of representatives.
    """

    __slots__ = ("rep", "scalars")

    def __init__(self, m: MatrixElt, scalars: Sequence[int] | None = None):
        if scalars is None:
            scalars = root_of_unity_scalars(m.field, m.n)
        self.scalars = tuple(scalars)
        self.rep = min((m.scale(l) for l in self.scalars), key=MatrixElt.sort_key)

    @property
    def field(self) -> Field:
        return self.rep.field

    @property
    def n(self) -> int:
        return self.rep.n

    def __mul__(self, other):
        if not isinstance(other, ProjectiveMatrix):
            return NotImplemented
        return ProjectiveMatrix(self.rep * other.rep, self.scalars)

    def inverse(self):
        return ProjectiveMatrix(self.rep.inverse(), self.scalars)

    def is_identity(self) -> bool:
        return self.rep.is_identity()

    def one(self):
        return ProjectiveMatrix(self.rep.one(), self.scalars)

    def sort_key(self):
        return self.rep.entries

    def __eq__(self, other):
        return isinstance(other, ProjectiveMatrix) and self.rep == other.rep

    def __lt__(self, other):
        return self.rep < other.rep

    def __hash__(self):
        return hash(self.rep)

    def __str__(self):
        return str(self.rep)

    __repr__ = __str__


@total_ordering
class ProductElt:
    """Element of a direct product, one component per factor."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence):
        self.components = tuple(components)

    def __mul__(self, other):
        if not isinstance(other, ProductElt) or len(other.components) != len(self.components):
            return NotImplemented
        return ProductElt([a * b for a, b in zip(self.components, other.components)])

    def inverse(self):
        return ProductElt([c.inverse() for c in self.components])

    def is_identity(self) -> bool:
        return all(c.is_identity() for c in self.components)

    def one(self):
        return ProductElt([c.one() for c in self.components])

    def sort_key(self):
        return tuple(c.sort_key() for c in self.components)

    def __eq__(self, other):
        return isinstance(other, ProductElt) and self.components == other.components

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return "{" + " | ".join(map(str, self.components)) + "}"

    __repr__ = __str__


GroupElement = Union[Permutation, MatrixElt, ProjectiveMatrix, ProductElt]


def _check_kind(x, y):
    if type(x) is not type(y):
        raise ElementError(f"cannot combine {type(x).__name__} with {type(y).__name__}")


def conj(x: GroupElement, y: GroupElement) -> GroupElement:
    """x^y = y^-1 x y."""
    _check_kind(x, y)
    return y.inverse() * x * y


def comm(x: GroupElement, y: GroupElement) -> GroupElement:
    """[x, y] = x^-1 y^-1 x y."""
    _check_kind(x, y)
    return x.inverse() * y.inverse() * x * y


def elt_arith(x: GroupElement, y: GroupElement | None, op: str) -> GroupElement:
    if op == "inv":
        return x.inverse()
    if y is None:
        raise ElementError(f"{op} needs two operands")
    _check_kind(x, y)
    if op == "mul":
        return x * y
    if op == "conj":
        return conj(x, y)
    if op == "comm":
        return comm(x, y)
    raise ElementError(f"unknown operation {op!r}")


def power(x: GroupElement, k: int) -> GroupElement:
    if k < 0:
        x, k = x.inverse(), -k
    result, base = x.one(), x
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result


def elt_order(x: GroupElement) -> int:
    if isinstance(x, Permutation):
        return math.lcm(*(len(c) for c in x.cycles())) if x.cycles() else 1
    n, y = 1, x
    while not y.is_identity():
        y = y * x
        n += 1
    return n


def is_two_element(x: GroupElement) -> bool:
    o = elt_order(x)
    return o & (o - 1) == 0
