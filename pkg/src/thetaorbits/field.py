"""Arithmetic in GF(p^f) with a deterministic defining polynomial.

An element is stored as an integer *code* ``c0 + c1*p + ... + c_{f-1}*p^(f-1)``
where ``c0, ..., c_{f-1}`` are its coefficients over GF(p) in the polynomial
basis ``1, x, ..., x^(f-1)``.  The code is a bijection with the coefficient
vector, so equality of codes is coefficient-wise equality, and the natural
order of codes is the element order used everywhere else in the package.

The defining polynomial is the monic irreducible of degree ``f`` whose
coefficient code (same encoding, constant term lowest) is smallest.
"""
from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

# Fields at or below this size get dense add/mul tables.
TABLE_LIMIT = 1 << 12


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**f``; raise if ``q`` is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    f = 0
    r = q
    while r % p == 0:
        r //= p
        f += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, f


# -- polynomials over GF(p): coefficient lists, constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return _trim(q), a


def _monic_polys(p: int, deg: int) -> Iterable[list[int]]:
    for low in itertools.product(range(p), repeat=deg):
        yield list(reversed(low)) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_divmod(poly, g, p)[1]:
                return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, f: int) -> tuple[int, ...]:
    """Monic irreducible of degree f with the smallest coefficient code."""
    for r in range(p**f):
        low = [(r // p**i) % p for i in range(f)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {f} over GF({p})")


class Field:
    """The finite field GF(p^f).  Immutable once built; safe to share."""

    def __init__(self, p: int, f: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if f < 1:
            raise FieldError("extension degree must be >= 1")
        if modulus is None:
            modulus = default_modulus(p, f)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != f + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree f")
            if not is_irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = tuple(modulus)
        self._tables = None
        self._py = None

    # -- construction helpers ----------------------------------------------

    @classmethod
    def of_order(cls, q: int) -> "Field":
        return get_field(q)

    def __repr__(self):
        return f"GF({self.p}^{self.f})" if self.f > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.f, self.modulus) == (
            other.p, other.f, other.modulus)

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def spec_string(self) -> str:
        return f"GF({self.p}^{self.f})[{','.join(map(str, self.modulus))}]"

    # -- code <-> coefficients ----------------------------------------------

    def coeffs(self, code: int) -> tuple[int, ...]:
        p = self.p
        return tuple((code // p**i) % p for i in range(self.f))

    def code(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.f:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, str):
            return FieldElement(self, self.parse(value))
        if isinstance(value, (int, np.integer)):
            if self.f == 1:
                return FieldElement(self, int(value) % self.p)
            if not 0 <= value < self.q:
                raise FieldError(f"code {value} out of range for {self}")
            return FieldElement(self, int(value))
        return FieldElement(self, self.code(value))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(self.q)]

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        """The class of x; zero in a prime field (modulus x)."""
        return FieldElement(self, self.code([0, 1]))

    def basis(self) -> list[int]:
        """Codes of 1, x, ..., x^(f-1)."""
        return [self.p**i for i in range(self.f)]

    # -- arithmetic on codes -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        if self._py is not None:
            return self._py[0][a][b]
        return self.code([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self.f == 1:
            return -a % self.p
        return self.code([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.f == 1:
            return a * b % self.p
        if self._py is not None:
            return self._py[1][a][b]
        return self._poly_mul_codes(a, b)

    def _poly_mul_codes(self, a: int, b: int) -> int:
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        return self.code(_poly_mod(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        """Inverse by the extended Euclidean algorithm on polynomials."""
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        if self.f == 1:
            return pow(a, -1, self.p)
        p = self.p
        r0, r1 = list(self.modulus), _trim(list(self.coeffs(a)))
        s0, s1 = [], [1]
        while r1:
            quo, rem = _poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            qs = _poly_mul(quo, s1, p)
            n = max(len(s0), len(qs))
            s0, s1 = s1, _trim([((s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)) % p
                                for i in range(n)])
        # r0 is a nonzero constant since the modulus is irreducible
        c = pow(r0[0], -1, p)
        return self.code([x * c for x in s0])

    def inv_fermat(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            if a == 0:
                raise ZeroDivisionError("0 raised to a negative power")
            a, n = self.inv(a), -n
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_square(self, a: int) -> bool:
        if self.p == 2:
            raise FieldError("every element of a field of characteristic 2 is a square")
        return self.pow(a, (self.q - 1) // 2) in (0, 1)

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    @functools.cached_property
    def primitive(self) -> int:
        """Smallest code generating the multiplicative group."""
        return next(a for a in range(1, self.q) if self.mult_order(a) == self.q - 1)

    # -- dense tables for the vectorized matrix code -------------------------

    def build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(add, mul) tables indexed by code; built once, then used by scalar ops too."""
        if self._tables is None:
            if self.q > TABLE_LIMIT:
                raise FieldError(f"{self} is too large for dense tables")
            q = self.q
            codes = np.arange(q)
            digits = np.stack([(codes // self.p**i) % self.p for i in range(self.f)], axis=1)
            weights = self.p ** np.arange(self.f)
            add = ((digits[:, None, :] + digits[None, :, :]) % self.p) @ weights
            mul = np.zeros((q, q), dtype=np.int64)
            for a in range(1, q):
                for b in range(a, q):
                    mul[a, b] = mul[b, a] = self._poly_mul_codes(a, b)
            self._tables = (add.astype(np.int64), mul)
            self._py = (self._tables[0].tolist(), mul.tolist())
        return self._tables

    @property
    def add_table(self) -> np.ndarray:
        return self.build_tables()[0]

    @property
    def mul_table(self) -> np.ndarray:
        return self.build_tables()[1]

    @functools.cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.q)], dtype=np.int64)

    @functools.cached_property
    def inv_table(self) -> np.ndarray:
        return np.array([0] + [self.inv(a) for a in range(1, self.q)], dtype=np.int64)

    # -- text ---------------------------------------------------------------

    def format(self, code: int) -> str:
        """Integer for prime fields, polynomial in x otherwise."""
        if self.f == 1:
            return str(code)
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs(code)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def parse(self, text: str) -> int:
        """Inverse of :meth:`format`; also accepts a bare integer code or
        the serialized ``p^f:c0,...`` form."""
        text = text.strip().replace(" ", "")
        if ":" in text:
            head, body = text.split(":", 1)
            if head != f"{self.p}^{self.f}":
                raise FieldError(f"element {text!r} is not in {self}")
            cs = [int(c) for c in body.split(",")]
            if len(cs) != self.f:
                raise FieldError(f"expected {self.f} coefficients in {text!r}")
            return self.code(cs)
        try:
            v = int(text)
        except ValueError:
            pass
        else:
            if self.f == 1:
                return v % self.p
            if v < 0:
                return self.neg(self.parse(str(-v)))
            if not 0 <= v < self.q:
                raise FieldError(f"code {v} out of range for {self}")
            return v
        coeffs = [0] * (self.f + 1)
        for term in text.replace("-", "+-").split("+"):
            if not term:
                continue
            sign = -1 if term.startswith("-") else 1
            term = term.lstrip("-")
            if "x" not in term:
                coeffs[0] += sign * int(term)
                continue
            c, _, mono = term.rpartition("x")
            c = c.rstrip("*")
            c = int(c) if c else 1
            e = int(mono[1:]) if mono.startswith("^") else 1
            if e >= len(coeffs):
                coeffs.extend([0] * (e - len(coeffs) + 1))
            coeffs[e] += sign * c
        return self.code(_poly_mod([c % self.p for c in coeffs], self.modulus, self.p))

    def serialize(self, code: int) -> str:
        return f"{self.p}^{self.f}:" + ",".join(map(str, self.coeffs(code)))


@functools.lru_cache(maxsize=None)
def get_field(q: int) -> Field:
    """Shared field context of order q with the default modulus."""
    p, f = prime_power(q)
    return Field(p, f)


@functools.total_ordering
class FieldElement:
    """An element of a :class:`Field`; supports the usual operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError(f"mixed fields {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field(other).value if self.field.f == 1 else self.field.code([other])
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_square(self) -> bool:
        return self.field.is_square(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self._other(other)
        return NotImplemented

    def __lt__(self, other):
        return self.value < self._other(other)

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return self.field.format(self.value)

    def serialize(self) -> str:
        return self.field.serialize(self.value)
