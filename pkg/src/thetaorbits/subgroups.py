"""Subgroups of an enumerated group: centralizers, normalizers, classes,
normal closures, derived and lower central series, soluble radical.

Everything is an exhaustive scan over index arrays; no stabilizer chains.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .elements import ElementError
from .table import GroupTable, subgroup_closure_indices


@dataclass
class Subgroup:
    parent: GroupTable
    members: np.ndarray          # sorted parent indices
    generators: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.members = np.asarray(self.members, dtype=np.int64)
        self._mask = None

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def mask(self) -> np.ndarray:
        if self._mask is None:
            self._mask = np.zeros(len(self.parent), dtype=bool)
            self._mask[self.members] = True
        return self._mask

    def __contains__(self, i) -> bool:
        return bool(self.mask[int(i)])

    def contains(self, idx) -> np.ndarray:
        return self.mask[np.asarray(idx)]

    def is_trivial(self) -> bool:
        return self.order == 1

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and np.array_equal(self.members, other.members))

    def __repr__(self):
        return f"Subgroup(order={self.order} in {self.parent!r})"


def whole(G: GroupTable) -> Subgroup:
    return Subgroup(G, np.arange(len(G)), list(G.generators))


def trivial(G: GroupTable) -> Subgroup:
    return Subgroup(G, np.array([G.identity]), [])


def generate(G: GroupTable, gens: Iterable[int]) -> Subgroup:
    """Subgroup generated by ``gens``, keeping only generators that enlarge it."""
    kept: list[int] = []
    members = np.array([G.identity])
    mask = np.zeros(len(G), dtype=bool)
    mask[G.identity] = True
    for g in gens:
        g = int(g)
        if mask[g]:
            continue
        kept.append(g)
        members = subgroup_closure_indices(G, kept, start=members)
        mask[members] = True
    return Subgroup(G, members, kept)


def _gens(H: Subgroup) -> list[int]:
    if H.generators or H.order == 1:
        return H.generators
    H.generators = generate(H.parent, H.members).generators
    return H.generators


def is_subgroup(G: GroupTable, members: np.ndarray) -> bool:
    """Closure check on all pairs (finite, so products suffice)."""
    members = np.asarray(members)
    mask = np.zeros(len(G), dtype=bool)
    mask[members] = True
    if not mask[G.identity]:
        return False
    a = np.repeat(members, len(members))
    b = np.tile(members, len(members))
    return bool(np.all(mask[G.mul(a, b)]))


def centralizer(G: GroupTable, x: int) -> Subgroup:
    x = int(x)
    if not 0 <= x < len(G):
        raise ElementError("element not in table")
    allg = np.arange(len(G))
    members = np.flatnonzero(G.mul(allg, [x]) == G.mul([x], allg))
    return Subgroup(G, members)


def centralizer_of_subgroup(G: GroupTable, H: Subgroup) -> Subgroup:
    allg = np.arange(len(G))
    keep = np.ones(len(G), dtype=bool)
    for h in _gens(H):
        keep &= G.mul(allg, [h]) == G.mul([h], allg)
    return Subgroup(G, np.flatnonzero(keep))


def normalizer(G: GroupTable, L: Subgroup) -> Subgroup:
    """{g : L^g = L}, testing conjugates of a generating set of L."""
    if L.parent is not G:
        raise ElementError("subgroup belongs to a different table")
    allg = np.arange(len(G))
    keep = np.ones(len(G), dtype=bool)
    for l in _gens(L):
        keep &= L.mask[G.conj(np.full(len(G), l), allg)]
    return Subgroup(G, np.flatnonzero(keep))


def conjugacy_class(G: GroupTable, x: int, by: Sequence[int] | None = None) -> np.ndarray:
    """Sorted class of x: orbit of x under conjugation by the generators."""
    gens = np.asarray(by if by is not None else G.generators, dtype=np.int64)
    mask = np.zeros(len(G), dtype=bool)
    mask[x] = True
    frontier = np.array([x])
    while frontier.size and gens.size:
        imgs = G.conj(np.repeat(frontier, len(gens)), np.tile(gens, len(frontier)))
        imgs = np.unique(imgs)
        frontier = imgs[~mask[imgs]]
        mask[frontier] = True
    return np.flatnonzero(mask)


def conjugacy_classes(G: GroupTable) -> list[tuple[int, int]]:
    """(least element, class size) for every class, ordered by representative."""
    done = np.zeros(len(G), dtype=bool)
    out = []
    for x in range(len(G)):
        if done[x]:
            continue
        cls = conjugacy_class(G, x)
        done[cls] = True
        out.append((x, len(cls)))
    return out


def normal_closure(G: GroupTable, xs, within: Subgroup | None = None) -> Subgroup:
    """Smallest subgroup containing ``xs`` normalized by ``within`` (default G)."""
    xs = [int(x) for x in np.atleast_1d(xs)]
    conj_by = np.asarray(_gens(within) if within is not None else G.generators, dtype=np.int64)
    N = generate(G, xs)
    while True:
        ng = np.asarray(N.generators, dtype=np.int64)
        if ng.size == 0 or conj_by.size == 0:
            return N
        imgs = np.unique(G.conj(np.repeat(ng, len(conj_by)), np.tile(conj_by, len(ng))))
        new = imgs[~N.mask[imgs]]
        if new.size == 0:
            return N
        N = generate(G, list(N.generators) + new.tolist())


def commutator_subgroup(G: GroupTable, A: Subgroup, B: Subgroup) -> Subgroup:
    """[A, B] for A, B normalizing each other: normal closure in <A, B> of
    commutators of generators."""
    ag, bg = _gens(A), _gens(B)
    if not ag or not bg:
        return trivial(G)
    a = np.repeat(ag, len(bg))
    b = np.tile(bg, len(ag))
    comms = np.unique(G.comm(a, b))
    amb = generate(G, list(ag) + list(bg))
    return normal_closure(G, comms, within=amb)


def derived_subgroup(G: GroupTable, H: Subgroup | None = None) -> Subgroup:
    H = H if H is not None else whole(G)
    return commutator_subgroup(G, H, H)


def derived_series(G: GroupTable, H: Subgroup | None = None) -> list[Subgroup]:
    H = H if H is not None else whole(G)
    series = [H]
    while True:
        D = derived_subgroup(G, series[-1])
        if D.order == series[-1].order:
            return series
        series.append(D)


def is_soluble(G: GroupTable, H: Subgroup | None = None) -> bool:
    return derived_series(G, H)[-1].order == 1


def lower_central_series(G: GroupTable) -> list[Subgroup]:
    W = whole(G)
    series = [W]
    while True:
        nxt = commutator_subgroup(G, series[-1], W)
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def is_nilpotent(G: GroupTable) -> bool:
    return lower_central_series(G)[-1].order == 1


def is_normal(G: GroupTable, N: Subgroup) -> bool:
    ng = np.asarray(_gens(N), dtype=np.int64)
    gg = np.asarray(G.generators, dtype=np.int64)
    if ng.size == 0 or gg.size == 0:
        return True
    return bool(np.all(N.mask[G.conj(np.repeat(ng, len(gg)), np.tile(gg, len(ng)))]))


@dataclass
class RadicalResult:
    radical: Subgroup
    class_reps: list[int]
    normal: bool
    soluble: bool
    maximal: bool           # every class rep outside R yields a non-soluble closure with R

    @property
    def certified(self) -> bool:
        return self.normal and self.soluble and self.maximal

    @property
    def index(self) -> int:
        return len(self.radical.parent) // self.radical.order


def soluble_radical(G: GroupTable, classes: list[tuple[int, int]] | None = None) -> RadicalResult:
    """R(G) = <g : normal closure of g is soluble>, with a maximality certificate."""
    classes = classes if classes is not None else conjugacy_classes(G)
    reps = [r for r, _ in classes]
    good = []
    for r in reps:
        if r == G.identity:
            continue
        if is_soluble(G, normal_closure(G, [r])):
            good.append(r)
    R = normal_closure(G, good) if good else trivial(G)
    normal = is_normal(G, R)
    soluble = is_soluble(G, R)
    maximal = True
    for r in reps:
        if R.mask[r]:
            continue
        bigger = normal_closure(G, list(R.generators) + [r])
        if is_soluble(G, bigger):
            maximal = False
            break
    return RadicalResult(R, reps, normal, soluble, maximal)


def coset_labels(G: GroupTable, K: Subgroup) -> np.ndarray:
    """Label each element by the least index in its coset gK."""
    allg = np.arange(len(G))
    lab = allg.copy()
    for k in K.members:
        np.minimum(lab, G.mul(allg, [k]), out=lab)
    return lab
