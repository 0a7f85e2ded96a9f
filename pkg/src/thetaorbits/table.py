"""Exhaustively enumerated groups.

A :class:`GroupTable` stores every element of a group as a row of a numpy
array, sorted by the canonical total order.  Elements are addressed by their
position ("index"); all bulk operations take and return index arrays.
"""
from __future__ import annotations

import functools
import logging
import math
from typing import Iterable, Sequence

import numpy as np

from .elements import ElementError
from .reps import Rep, orders_and_inverses

log = logging.getLogger(__name__)

DEFAULT_CAP = 20_000_000
CHUNK = 1 << 17


class CapExceeded(RuntimeError):
    pass


class GroupTable:
    def __init__(self, rep: Rep, rows: np.ndarray, keys: np.ndarray | None = None,
                 generators: Sequence[int] | None = None, spec: str = "",
                 generator_rows: np.ndarray | None = None):
        if keys is None:
            keys = rep.keys(rows)
        order = np.argsort(keys, kind="stable")
        if np.any(order != np.arange(len(order))):
            rows, keys = rows[order], keys[order]
        if len(keys) > 1 and np.any(keys[1:] == keys[:-1]):
            raise ElementError("duplicate elements in group table")
        self.rep = rep
        self.rows = np.ascontiguousarray(rows)
        self.keys = keys
        self.spec = spec
        self.identity = int(self.find(rep.identity_row()[None, :])[0])
        if self.identity < 0:
            raise ElementError("identity missing from group table")
        if generator_rows is not None:
            generators = self.index(generator_rows).tolist()
        self.generators = list(generators) if generators is not None else []

    def __len__(self):
        return len(self.keys)

    @property
    def order(self) -> int:
        return len(self.keys)

    def __repr__(self):
        return f"GroupTable({self.spec or self.rep.kind}, order={len(self)})"

    # -- lookup ----------------------------------------------------------------

    def find(self, rows: np.ndarray) -> np.ndarray:
        """Indices of rows, or -1 where a row is not in the table."""
        k = self.rep.keys(rows)
        pos = np.searchsorted(self.keys, k)
        pos = np.minimum(pos, len(self.keys) - 1)
        return np.where(self.keys[pos] == k, pos, -1)

    def index(self, rows: np.ndarray) -> np.ndarray:
        out = self.find(rows)
        if np.any(out < 0):
            raise ElementError("element not in group")
        return out

    def index_of(self, x) -> int:
        return int(self.index(self.rep.from_element(x)[None, :])[0])

    def element(self, i: int):
        return self.rep.to_element(self.rows[int(i)])

    def parse(self, text: str) -> int:
        return self.index_of(self.rep.parse(text))

    def format(self, i: int) -> str:
        return str(self.element(i))

    # -- arithmetic on indices ---------------------------------------------------

    def mul_rows(self, i, j) -> np.ndarray:
        i = np.atleast_1d(np.asarray(i))
        j = np.atleast_1d(np.asarray(j))
        return self.rep.mul(self.rows[i], self.rows[j])

    def mul(self, i, j) -> np.ndarray:
        """Vectorized product of index arrays (broadcasting a length-1 side)."""
        i = np.atleast_1d(np.asarray(i))
        j = np.atleast_1d(np.asarray(j))
        n = max(len(i), len(j))
        if n <= CHUNK:
            return self.index(self.rep.mul(self.rows[i], self.rows[j]))
        out = np.empty(n, dtype=np.int64)
        for s in range(0, n, CHUNK):
            ii = i if len(i) == 1 else i[s:s + CHUNK]
            jj = j if len(j) == 1 else j[s:s + CHUNK]
            out[s:s + CHUNK] = self.index(self.rep.mul(self.rows[ii], self.rows[jj]))
        return out

    def inv(self, i) -> np.ndarray:
        return self.inv_index[np.asarray(i)]

    def conj(self, x, y) -> np.ndarray:
        """x^y = y^-1 x y."""
        return self.mul(self.mul(self.inv(y), x), y)

    def comm(self, x, y) -> np.ndarray:
        """[x, y] = x^-1 y^-1 x y."""
        x = np.atleast_1d(np.asarray(x))
        y = np.atleast_1d(np.asarray(y))
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    @functools.cached_property
    def _orders_inverses(self):
        n = len(self)
        orders = np.empty(n, dtype=np.int64)
        inv_idx = np.empty(n, dtype=np.int64)
        for s in range(0, n, CHUNK):
            o, inv_rows = orders_and_inverses(self.rep, self.rows[s:s + CHUNK], limit=n)
            orders[s:s + CHUNK] = o
            inv_idx[s:s + CHUNK] = self.index(inv_rows)
        return orders, inv_idx

    @property
    def orders(self) -> np.ndarray:
        return self._orders_inverses[0]

    @property
    def inv_index(self) -> np.ndarray:
        return self._orders_inverses[1]

    @functools.cached_property
    def exponent(self) -> int:
        return math.lcm(*np.unique(self.orders).tolist())

    def is_two_element(self, i) -> np.ndarray:
        o = self.orders[np.asarray(i)]
        return (o & (o - 1)) == 0

    def is_abelian(self) -> bool:
        g = np.array(self.generators or [self.identity])
        a = np.repeat(g, len(g))
        b = np.tile(g, len(g))
        return bool(np.all(self.mul(a, b) == self.mul(b, a)))


def closure_generate(rep: Rep, generators: Sequence, cap: int = DEFAULT_CAP,
                     spec: str = "") -> GroupTable:
    """Breadth-first closure of a generating set under right multiplication.

    ``generators`` may be scalar elements or rows of ``rep``.  Raises
    :class:`CapExceeded` as soon as more than ``cap`` elements are found.
    """
    gens = [g if isinstance(g, np.ndarray) else rep.from_element(g) for g in generators]
    if not gens:
        raise ElementError("empty generating set")
    G = np.stack(gens).astype(rep.dtype)
    ident = rep.identity_row()[None, :].astype(rep.dtype)
    known_keys = rep.keys(ident)
    chunks = [ident]
    frontier = ident
    while frontier.shape[0]:
        cand = []
        for g in G:
            for s in range(0, frontier.shape[0], CHUNK):
                cand.append(rep.mul(frontier[s:s + CHUNK], g[None, :]))
        cand = np.concatenate(cand)
        k = rep.keys(cand)
        k, first = np.unique(k, return_index=True)
        pos = np.searchsorted(known_keys, k)
        pos = np.minimum(pos, len(known_keys) - 1)
        fresh = known_keys[pos] != k
        frontier = cand[first[fresh]]
        if frontier.shape[0]:
            known_keys = np.sort(np.concatenate([known_keys, k[fresh]]))
            chunks.append(frontier)
            if len(known_keys) > cap:
                raise CapExceeded(f"group order exceeds cap {cap}")
    rows = np.concatenate(chunks)
    log.debug("closure found %d elements", rows.shape[0])
    return GroupTable(rep, rows, generator_rows=G, spec=spec)


def subgroup_closure_indices(G: GroupTable, gens: Iterable[int],
                             start: np.ndarray | None = None) -> np.ndarray:
    """Sorted indices of the subgroup of G generated by ``gens`` (and ``start``)."""
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    mask = np.zeros(len(G), dtype=bool)
    if start is None:
        start = np.array([G.identity])
    mask[start] = True
    mask[G.identity] = True
    frontier = np.flatnonzero(mask)
    if gens.size == 0:
        return frontier
    while frontier.size:
        prods = G.mul(np.repeat(frontier, len(gens)), np.tile(gens, len(frontier)))
        prods = np.unique(prods)
        frontier = prods[~mask[prods]]
        mask[frontier] = True
    return np.flatnonzero(mask)


def subgroup_table(G: GroupTable, members: np.ndarray, generators: Sequence[int] = (),
                   spec: str = "") -> GroupTable:
    """A standalone table for a subgroup given by member indices of G."""
    members = np.asarray(members)
    rows = G.rows[members]
    H = GroupTable(G.rep, rows, keys=G.keys[members], spec=spec)
    if len(generators):
        H.generators = H.index(G.rows[np.asarray(generators)]).tolist()
    return H
