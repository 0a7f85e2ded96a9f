"""Suzuki groups Sz(q), q = 2^(2m+1), as 4x4 matrices over GF(q).

Generators are the lower unitriangular ``T(a, b)``, the diagonal ``D(k)`` and
the antidiagonal involution ``z``.  With ``s = 2^(m+1)`` (so ``s^2 = 2q``),
``T(a,b) T(c,d) = T(a+c, a c^s + b + d)`` and every element outside the
Borel subgroup ``HD`` factors uniquely as ``T(a,b) D(k) z T(c,d)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .elements import ElementError, MatrixElt
from .field import Field, FieldElement, get_field


@dataclass(frozen=True)
class SuzukiParams:
    m: int
    q: int = dc_field(init=False)
    s: int = dc_field(init=False)
    field: Field = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise ElementError("Sz(q) needs q = 2^(2m+1) with m >= 1")
        object.__setattr__(self, "q", 2 ** (2 * self.m + 1))
        object.__setattr__(self, "s", 2 ** (self.m + 1))
        object.__setattr__(self, "field", get_field(self.q))
        # k -> k^(2^m+1) must permute GF(q)^x for the factorization to be unique
        F = self.field
        images = {F.pow(k, self.d_exponent) for k in range(1, self.q)}
        if len(images) != self.q - 1:
            raise ElementError("k -> k^(2^m+1) is not a bijection")
        assert math.gcd(self.d_exponent, self.q - 1) == 1

    @classmethod
    def from_q(cls, q: int) -> "SuzukiParams":
        e = q.bit_length() - 1
        if q != 1 << e or e % 2 == 0 or e < 3:
            raise ElementError(f"Sz(q) needs q = 2^(2m+1) >= 8, got {q}")
        return cls((e - 1) // 2)

    @property
    def d_exponent(self) -> int:
        """2^m + 1 = s/2 + 1, the exponent in the (1,1) entry of D(k)."""
        return 2**self.m + 1

    @property
    def order(self) -> int:
        q = self.q
        return q * q * (q * q + 1) * (q - 1)


def _val(F: Field, x) -> int:
    return x.value if isinstance(x, FieldElement) else F(x).value


def suzuki_T(a, b, params: SuzukiParams) -> MatrixElt:
    F, s = params.field, params.s
    a, b = _val(F, a), _val(F, b)
    add, mul, pw = F.add, F.mul, F.pow
    r3 = add(pw(a, 1 + s), b)
    r4 = add(add(pw(a, 2 + s), mul(a, b)), pw(b, s))
    return MatrixElt(F, 4, [
        1, 0, 0, 0,
        a, 1, 0, 0,
        r3, pw(a, s), 1, 0,
        r4, b, a, 1,
    ])


def suzuki_D(k, params: SuzukiParams) -> MatrixElt:
    F = params.field
    k = _val(F, k)
    if k == 0:
        raise ElementError("D(k) needs k != 0")
    t = 2**params.m
    pw = F.pow
    return MatrixElt(F, 4, [
        pw(k, t + 1), 0, 0, 0,
        0, pw(k, t), 0, 0,
        0, 0, pw(k, -t), 0,
        0, 0, 0, pw(k, -(t + 1)),
    ])


def suzuki_z(params: SuzukiParams) -> MatrixElt:
    return MatrixElt(params.field, 4, [
        0, 0, 0, 1,
        0, 0, 1, 0,
        0, 1, 0, 0,
        1, 0, 0, 0,
    ])


def suzuki_generators(params: SuzukiParams) -> list[MatrixElt]:
    F = params.field
    gens = [suzuki_T(a, 0, params) for a in F.basis()]
    gens.append(suzuki_T(0, 1, params))
    gens.append(suzuki_D(F.primitive, params))
    gens.append(suzuki_z(params))
    return gens


def suzuki_compose(a, b, k, c, d, params: SuzukiParams) -> MatrixElt:
    return (suzuki_T(a, b, params) * suzuki_D(k, params) * suzuki_z(params)
            * suzuki_T(c, d, params))


def suzuki_decompose(E: MatrixElt, params: SuzukiParams) -> tuple[int, int, int, int, int]:
    """Codes (a, b, k, c, d) with E = T(a,b) D(k) z T(c,d).

    Read off the first row and last column: E14 = k^(s/2+1), E12 = E14 d,
    E13 = E14 c, E24 = E14 a, E34 = E14 (a^(1+s) + b).
    """
    F = params.field
    e14 = E.entries[3]
    if e14 == 0:
        raise ElementError("element lies in the Borel subgroup HD (E14 = 0)")
    root = pow(params.d_exponent, -1, params.q - 1)
    k = F.pow(e14, root)
    inv14 = F.inv(e14)
    d = F.mul(E.entries[1], inv14)
    c = F.mul(E.entries[2], inv14)
    a = F.mul(E.entries[7], inv14)
    b = F.add(F.mul(E.entries[11], inv14), F.pow(a, 1 + params.s))
    return a, b, k, c, d


def in_borel(E: MatrixElt) -> bool:
    return E.entries[3] == 0


def suzuki_normal_form(E: MatrixElt, params: SuzukiParams) -> tuple[int, int, int]:
    """(A, B, K) with E = T(e,f)^-1 T(A,B) D(K) z T(e,f) for some e, f.

    From E = T(a1,b1) D(K) z T(c1,d1): e = c1, f = d1, A = a1 + e and
    B = b1 + e A^s + e^(s+1) + f (characteristic 2, so signs drop).
    """
    F, s = params.field, params.s
    a1, b1, K, c1, d1 = suzuki_decompose(E, params)
    A = F.add(a1, c1)
    B = F.add(F.add(F.add(b1, F.mul(c1, F.pow(A, s))), F.pow(c1, s + 1)), d1)
    return A, B, K
