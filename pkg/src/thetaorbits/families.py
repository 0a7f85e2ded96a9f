"""Concrete group families and the group-spec grammar.

Grammar (whitespace ignored)::

    A<n> | S<n> | SL<n>:<q> | GL<n>:<q> | PSL<n>:<q> | Sz:<q> | C<n> | D<n>
    | Aff:<q> | prod(<spec>,<spec>) | perm{<cycles>;<cycles>;...}
    | mat<n>:<q>{<matrix>;<matrix>;...}

``D<n>`` is the dihedral group of order n.  ``Aff:<q>`` is GF(q) x| GF(q)^x
realized as the matrices [[h,0],[a,1]], i.e. x -> x h + a acting on row
vectors (x, 1), so (a,h)(b,k) = (a k + b, h k).
"""
from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass

import numpy as np

from .elements import ElementError, MatrixElt, Permutation
from .field import get_field, prime_power
from .reps import MatRep, PermRep, ProductRep, ProjRep, split_top_level
from .suzuki import SuzukiParams, suzuki_generators
from .table import DEFAULT_CAP, CapExceeded, GroupTable, closure_generate


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    family: str
    n: int = 0
    q: int = 0
    parts: tuple = ()
    text: str = ""

    def __str__(self):
        return self.text


_SIMPLE = [
    (re.compile(r"PSL(\d+):(\d+)"), "PSL", ("n", "q")),
    (re.compile(r"SL(\d+):(\d+)"), "SL", ("n", "q")),
    (re.compile(r"GL(\d+):(\d+)"), "GL", ("n", "q")),
    (re.compile(r"Sz:(\d+)"), "Sz", ("q",)),
    (re.compile(r"Aff:(\d+)"), "Aff", ("q",)),
    (re.compile(r"A(\d+)"), "A", ("n",)),
    (re.compile(r"S(\d+)"), "S", ("n",)),
    (re.compile(r"C(\d+)"), "C", ("n",)),
    (re.compile(r"D(\d+)"), "D", ("n",)),
]


def parse_spec(text: str) -> GroupSpec:
    t = re.sub(r"\s+", "", text)
    for rx, fam, fields in _SIMPLE:
        m = rx.fullmatch(t)
        if m:
            vals = dict(zip(fields, map(int, m.groups())))
            spec = GroupSpec(fam, text=t, **vals)
            _validate(spec)
            return spec
    if t.startswith("prod(") and t.endswith(")"):
        parts = split_top_level(t[5:-1], ",")
        if len(parts) < 2:
            raise SpecError("prod needs at least two factors")
        subs = tuple(parse_spec(p) for p in parts)
        return GroupSpec("prod", parts=subs, text="prod(" + ",".join(s.text for s in subs) + ")")
    m = re.fullmatch(r"perm(\d*)\{(.*)\}", t)
    if m:
        gens = tuple(g for g in m.group(2).split(";") if g)
        if not gens:
            raise SpecError("perm{} needs at least one generator")
        return GroupSpec("perm", n=int(m.group(1) or 0), parts=gens, text=t)
    m = re.fullmatch(r"mat(\d+):(\d+)\{(.*)\}", t)
    if m:
        gens = tuple(g for g in split_top_level(m.group(3), ";") if g)
        if not gens:
            raise SpecError("mat{} needs at least one generator")
        spec = GroupSpec("mat", n=int(m.group(1)), q=int(m.group(2)), parts=gens, text=t)
        _validate(spec)
        return spec
    raise SpecError(f"cannot parse group spec {text!r}")


def _validate(spec: GroupSpec):
    fam = spec.family
    if spec.q:
        try:
            prime_power(spec.q)
        except ValueError as e:
            raise SpecError(str(e)) from None
    if fam in ("SL", "GL", "PSL", "mat") and spec.n < 1:
        raise SpecError("matrix dimension must be >= 1")
    if fam == "Sz":
        try:
            SuzukiParams.from_q(spec.q)
        except ElementError as e:
            raise SpecError(str(e)) from None
    if fam in ("A", "S", "C") and spec.n < 1:
        raise SpecError(f"{fam}{spec.n} is not a valid group")
    if fam == "D" and (spec.n < 4 or spec.n % 2):
        raise SpecError("D<n> needs even n >= 4 (n is the group order)")


# -- closed-form orders -------------------------------------------------------

def gl_order(n: int, q: int) -> int:
    return math.prod(q**n - q**i for i in range(n))


def order_formula(spec: GroupSpec | str) -> int | None:
    """Closed-form group order, or None when the family has no formula."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    fam, n, q = spec.family, spec.n, spec.q
    if fam == "S":
        return math.factorial(n)
    if fam == "A":
        return max(1, math.factorial(n) // 2)
    if fam in ("C", "D"):
        return n
    if fam == "GL":
        return gl_order(n, q)
    if fam == "SL":
        return gl_order(n, q) // (q - 1)
    if fam == "PSL":
        return gl_order(n, q) // (q - 1) // math.gcd(n, q - 1)
    if fam == "Sz":
        return q * q * (q * q + 1) * (q - 1)
    if fam == "Aff":
        return q * (q - 1)
    if fam == "prod":
        orders = [order_formula(p) for p in spec.parts]
        return None if None in orders else math.prod(orders)
    return None


def out_order(n: int, q: int) -> int:
    """|Out(PSL_n(q))|: gcd(q-1, n) f for n = 2, gcd(q-1, n) 2f for n >= 3."""
    p, f = prime_power(q)
    if n == 2:
        if q < 4:
            raise SpecError("the formula needs q >= 4 when n = 2")
        return math.gcd(q - 1, 2) * f
    if n >= 3:
        return math.gcd(q - 1, n) * 2 * f
    raise SpecError("the formula needs n >= 2")


def suzuki_out_order(q: int) -> int:
    """Out(Sz(q)) is cyclic of order 2m+1 (the field automorphisms)."""
    return 2 * SuzukiParams.from_q(q).m + 1


# -- generators ---------------------------------------------------------------

def _lex_perms(n: int) -> np.ndarray:
    """All permutations of range(n) in lexicographic order."""
    P = np.zeros((1, 0), dtype=np.uint8)
    for k in range(1, n + 1):
        # extend permutations of k-1 symbols to k symbols, keeping lex order
        blocks = []
        for first in range(k):
            rest = P + (P >= first)
            blocks.append(np.hstack([np.full((P.shape[0], 1), first, dtype=np.uint8),
                                     rest.astype(np.uint8)]))
        P = np.vstack(blocks)
    return P


def _parity(P: np.ndarray) -> np.ndarray:
    n = P.shape[1]
    inv = np.zeros(P.shape[0], dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            inv += P[:, i] > P[:, j]
    return inv % 2


def _sym_gens(n: int) -> list[Permutation]:
    if n < 2:
        return [Permutation.identity(n)]
    return [Permutation.from_cycles([(1, 2)], n), Permutation.from_cycles([tuple(range(1, n + 1))], n)]


def _alt_gens(n: int) -> list[Permutation]:
    if n < 3:
        return [Permutation.identity(n)]
    long = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
    return [Permutation.from_cycles([(1, 2, 3)], n), Permutation.from_cycles([long], n)]


def transvections(n: int, q: int) -> list[MatrixElt]:
    """I + lambda E_ij, i != j, lambda over the polynomial basis of GF(q)."""
    F = get_field(q)
    out = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for lam in F.basis():
                e = [1 if a == b else 0 for a in range(n) for b in range(n)]
                e[i * n + j] = lam
                out.append(MatrixElt(F, n, e))
    return out


def _dihedral_gens(order: int) -> list[Permutation]:
    m = order // 2
    if m == 2:
        return [Permutation.from_cycles([(1, 2)], 4), Permutation.from_cycles([(3, 4)], 4)]
    rot = Permutation.from_cycles([tuple(range(1, m + 1))], m)
    refl = Permutation.from_cycles([(i, m + 2 - i) for i in range(2, m // 2 + 2) if i < m + 2 - i], m)
    return [rot, refl]


def affine_element(a: int, h: int, q: int) -> MatrixElt:
    """The map x -> x h + a as the matrix [[h, 0], [a, 1]]."""
    return MatrixElt(get_field(q), 2, [h, 0, a, 1])


# -- construction ---------------------------------------------------------------

def make_group(spec: GroupSpec | str, cap: int = DEFAULT_CAP) -> GroupTable:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    expected = order_formula(spec)
    if expected is not None and expected > cap:
        raise CapExceeded(f"{spec}: order {expected} exceeds cap {cap}")
    G = _build(spec, cap)
    if expected is not None and len(G) != expected:
        raise ElementError(f"{spec}: enumerated {len(G)} elements, formula says {expected}")
    return G


def _build(spec: GroupSpec, cap: int) -> GroupTable:
    fam, n, q, text = spec.family, spec.n, spec.q, spec.text
    if fam in ("S", "A"):
        rep = PermRep(n)
        P = _lex_perms(n)
        if fam == "A":
            P = P[_parity(P) == 0]
        gens = _sym_gens(n) if fam == "S" else _alt_gens(n)
        return GroupTable(rep, P.astype(rep.dtype), spec=text, generator_rows=rep.rows(gens))
    if fam == "C":
        rep = PermRep(n)
        return closure_generate(rep, [Permutation.from_cycles([tuple(range(1, n + 1))], n)], cap, text)
    if fam == "D":
        gens = _dihedral_gens(n)
        return closure_generate(PermRep(gens[0].degree), gens, cap, text)
    if fam in ("SL", "GL", "PSL"):
        F = get_field(q)
        gens = transvections(n, q) if n > 1 else [MatrixElt.identity(F, 1)]
        if fam == "GL":
            d = [1 if a == b else 0 for a in range(n) for b in range(n)]
            d[0] = F.primitive
            gens.append(MatrixElt(F, n, d))
        rep = ProjRep(n, F) if fam == "PSL" else MatRep(n, F)
        return closure_generate(rep, gens, cap, text)
    if fam == "Sz":
        params = SuzukiParams.from_q(q)
        return closure_generate(MatRep(4, params.field), suzuki_generators(params), cap, text)
    if fam == "Aff":
        F = get_field(q)
        gens = [affine_element(0, F.primitive, q)] + [affine_element(b, 1, q) for b in F.basis()]
        return closure_generate(MatRep(2, F), gens, cap, text)
    if fam == "prod":
        factors = [make_group(p, cap) for p in spec.parts]
        rep = ProductRep(factors)
        total = math.prod(len(f) for f in factors)
        if total > cap:
            raise CapExceeded(f"{spec}: order {total} exceeds cap {cap}")
        grids = np.meshgrid(*[np.arange(len(f)) for f in factors], indexing="ij")
        rows = np.stack([g.reshape(-1) for g in grids], axis=1).astype(rep.dtype)
        gen_rows = []
        for i, f in enumerate(factors):
            for g in f.generators:
                r = rep.identity_row().copy()
                r[i] = g
                gen_rows.append(r)
        return GroupTable(rep, rows, spec=text, generator_rows=np.stack(gen_rows))
    if fam == "perm":
        cyc = [Permutation.parse(g) for g in spec.parts]
        deg = max([n] + [max((a for c in p.cycles() for a in c), default=1) for p in cyc])
        gens = [Permutation.parse(g, deg) for g in spec.parts]
        return closure_generate(PermRep(deg), gens, cap, text)
    if fam == "mat":
        F = get_field(q)
        gens = [MatrixElt.parse(g, F, n) for g in spec.parts]
        return closure_generate(MatRep(n, F), gens, cap, text)
    raise SpecError(f"unsupported family {fam}")


@functools.lru_cache(maxsize=32)
def cached_group(text: str, cap: int = DEFAULT_CAP) -> GroupTable:
    """In-process memo of :func:`make_group` keyed by the spec string."""
    return make_group(text, cap)
