"""Functional graphs of theta_u(g) = [g^-u, g] and eps_u(g) = [g, u].

``build_graph`` evaluates the map on every element of a table and stores the
successor array; ``eventual_orbits`` peels in-degree-0 nodes until only the
periodic part remains and then splits it into cycles.  ``trajectory`` is the
independent per-element route (Brent's algorithm on scalar elements), used
as an oracle and for groups too large to enumerate.
"""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np

from .elements import ElementError, comm, conj
from .table import CHUNK, GroupTable

MAP_KINDS = ("theta", "engel")
RESTRICTIONS = ("two_elements", "involutions", "order_2_or_4", "all")


def theta(u, g):
    """[g^-u, g] with g^-u = u^-1 g^-1 u."""
    return comm(conj(g.inverse(), u), g)


def engel(u, g):
    """[g, u]."""
    return comm(g, u)


def scalar_map(kind: str) -> Callable:
    if kind == "theta":
        return theta
    if kind == "engel":
        return engel
    raise ValueError(f"unknown map kind {kind!r}")


@dataclass
class FunctionalGraph:
    group: GroupTable
    kind: str
    u: int
    successor: np.ndarray


def _map_rows(G: GroupTable, kind: str, u: int, idx: np.ndarray) -> np.ndarray:
    rep = G.rep
    g = G.rows[idx]
    ginv = G.rows[G.inv_index[idx]]
    ur = G.rows[[u]]
    uinv = G.rows[[G.inv_index[u]]]
    if kind == "theta":
        a = rep.mul(rep.mul(uinv, g), ur)        # (g^-u)^-1 = u^-1 g u
        c = rep.mul(rep.mul(uinv, ginv), ur)     # g^-u
        return rep.mul(rep.mul(rep.mul(a, ginv), c), g)
    if kind == "engel":
        return rep.mul(rep.mul(rep.mul(ginv, uinv), g), ur)
    raise ValueError(f"unknown map kind {kind!r}")


def build_graph(G: GroupTable, kind: str, u: int, workers: int = 1) -> FunctionalGraph:
    if kind not in MAP_KINDS:
        raise ValueError(f"unknown map kind {kind!r}")
    u = int(u)
    if not 0 <= u < len(G):
        raise ElementError("u is not in the group")
    n = len(G)
    G.inv_index  # build before any worker threads start
    starts = list(range(0, n, CHUNK))

    def work(s):
        idx = np.arange(s, min(s + CHUNK, n))
        return G.index(_map_rows(G, kind, u, idx))

    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(workers) as ex:
            parts = list(ex.map(work, starts))
    else:
        parts = [work(s) for s in starts]
    succ = np.concatenate(parts).astype(np.int32)
    return FunctionalGraph(G, kind, u, succ)


@dataclass
class Cycle:
    length: int
    rep: int                 # least index on the cycle
    members: np.ndarray      # indices in map order starting at rep


@dataclass
class CycleStructure:
    cycles: list[Cycle]
    periodic: np.ndarray     # sorted indices on cycles
    preperiod_max: int
    label: np.ndarray        # cycle representative per periodic node (aligned with periodic)


def cycle_structure(successor: np.ndarray) -> CycleStructure:
    """Peel in-degree-0 nodes, then label the surviving cycles by their minima."""
    succ = np.asarray(successor, dtype=np.int64)
    n = len(succ)
    indeg = np.bincount(succ, minlength=n)
    alive = np.ones(n, dtype=bool)
    frontier = np.flatnonzero(indeg == 0)
    rounds = 0
    while frontier.size:
        rounds += 1
        alive[frontier] = False
        targets = succ[frontier]
        indeg -= np.bincount(targets, minlength=n)
        cand = np.unique(targets)
        frontier = cand[(indeg[cand] == 0) & alive[cand]]
    periodic = np.flatnonzero(alive)
    pos = np.full(n, -1, dtype=np.int64)
    pos[periodic] = np.arange(len(periodic))
    nxt = pos[succ[periodic]]
    if np.any(nxt < 0):
        raise AssertionError("successor of a periodic node is not periodic")
    label = periodic.copy()
    step = nxt.copy()
    span = 1
    while span < len(periodic):
        label = np.minimum(label, label[step])
        step = step[step]
        span *= 2
    cycles = []
    reps, counts = np.unique(label, return_counts=True)
    for r, c in zip(reps.tolist(), counts.tolist()):
        members = [r]
        x = int(succ[r])
        while x != r:
            members.append(x)
            x = int(succ[x])
        if len(members) != c:
            raise AssertionError("cycle labelling is inconsistent")
        cycles.append(Cycle(c, r, np.array(members, dtype=np.int64)))
    cycles.sort(key=lambda cy: (cy.length, cy.rep))
    return CycleStructure(cycles, periodic, rounds, label)


@dataclass
class OrbitReport:
    group: str
    kind: str
    u: int
    u_text: str
    beta: int
    cycles: list[Cycle]
    theta_set_size: int
    preperiod_max: int
    periodic: np.ndarray = field(repr=False)

    identity: int = field(default=0, repr=False)

    @property
    def histogram(self) -> dict[int, int]:
        """{cycle length: count} over the non-trivial cycles."""
        return dict(sorted(Counter(c.length for c in self.nontrivial()).items()))

    def nontrivial(self) -> list[Cycle]:
        return [c for c in self.cycles if c.rep != self.identity]

    def cycle_of(self, i: int) -> Cycle | None:
        if not hasattr(self, "_where"):
            self._where = {int(m): c for c in self.cycles for m in c.members}
        return self._where.get(int(i))

    def to_record(self, G: GroupTable, with_members: bool = False) -> dict:
        rec = {
            "format": 1,
            "group": self.group,
            "map": self.kind,
            "u": self.u_text,
            "beta": self.beta,
            "theta_set_size": self.theta_set_size,
            "preperiod_max": self.preperiod_max,
            "histogram": [[k, v] for k, v in self.histogram.items()],
            "representatives": [G.format(c.rep) for c in self.nontrivial()],
        }
        if with_members:
            rec["cycles"] = [[G.format(i) for i in c.members] for c in self.nontrivial()]
        return rec


def eventual_orbits(graph: FunctionalGraph) -> OrbitReport:
    G = graph.group
    cs = cycle_structure(graph.successor)
    e = G.identity
    if graph.successor[e] != e:
        raise AssertionError("the map does not fix the identity")
    beta = len(cs.cycles) - 1
    return OrbitReport(G.spec, graph.kind, graph.u, G.format(graph.u), beta, cs.cycles,
                       len(cs.periodic), cs.preperiod_max, cs.periodic, e)


def orbit_report(G: GroupTable, u: int, kind: str = "theta", workers: int = 1) -> OrbitReport:
    return eventual_orbits(build_graph(G, kind, u, workers))


def beta(G: GroupTable, u: int, kind: str = "theta", workers: int = 1) -> int:
    return orbit_report(G, u, kind, workers).beta


# -- per-class profiles ------------------------------------------------------------

def restriction_mask(orders: np.ndarray, restrict: str) -> np.ndarray:
    if restrict == "all":
        return np.ones(len(orders), dtype=bool)
    if restrict == "two_elements":
        return (orders & (orders - 1)) == 0
    if restrict == "involutions":
        return orders == 2
    if restrict == "order_2_or_4":
        return (orders == 2) | (orders == 4)
    raise ValueError(f"unknown restriction {restrict!r}")


@dataclass
class ProfileEntry:
    u: int
    class_size: int
    order: int
    beta: int


@dataclass
class BetaProfile:
    restrict: str
    kind: str
    entries: list[ProfileEntry]

    @property
    def kappa(self) -> int:
        return max((e.beta for e in self.entries), default=0)

    def all_zero(self) -> bool:
        return all(e.beta == 0 for e in self.entries)


def beta_profile(G: GroupTable, restrict: str = "two_elements", kind: str = "theta",
                 classes: Sequence[tuple[int, int]] | None = None, workers: int = 1) -> BetaProfile:
    """beta at one representative per conjugacy class satisfying ``restrict``."""
    from .subgroups import conjugacy_classes
    if classes is None:
        classes = conjugacy_classes(G)
    orders = G.orders
    ok = restriction_mask(orders, restrict)
    entries = []
    for r, size in classes:
        if ok[r]:
            entries.append(ProfileEntry(r, size, int(orders[r]), beta(G, r, kind, workers)))
    return BetaProfile(restrict, kind, entries)


# -- quotients ----------------------------------------------------------------------

def quotient_cycle_structure(graph: FunctionalGraph, labels: np.ndarray) -> CycleStructure:
    """Cycle structure of the induced map on the classes given by ``labels``
    (e.g. cosets of a normal subgroup), assuming the map respects them."""
    reps, compact = np.unique(labels, return_inverse=True)
    succ_q = compact[graph.successor[reps]]
    # well-definedness: every element of a class must land in the same class
    if np.any(compact[graph.successor] != succ_q[compact]):
        raise AssertionError("the map does not respect the partition")
    return cycle_structure(succ_q)


def quotient_beta(graph: FunctionalGraph, labels: np.ndarray) -> int:
    return len(quotient_cycle_structure(graph, labels).cycles) - 1


def product_cycle_count(lengths_a: Sequence[int], lengths_b: Sequence[int]) -> int:
    """Cycles of f x g from the cycle lengths of f and g: sum of gcd over pairs."""
    return sum(math.gcd(a, b) for a in lengths_a for b in lengths_b)


# -- per-element route ---------------------------------------------------------------

class StepLimit(RuntimeError):
    pass


def brent(f: Callable[[Hashable], Hashable], x0: Hashable, max_steps: int = 10**6) -> tuple[int, int]:
    """(preperiod, cycle length) of the sequence x0, f(x0), ... by Brent's method."""
    power = lam = 1
    tortoise, hare = x0, f(x0)
    steps = 1
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = f(hare)
        lam += 1
        steps += 1
        if steps > max_steps:
            raise StepLimit(f"no cycle within {max_steps} steps")
    tortoise = hare = x0
    for _ in range(lam):
        hare = f(hare)
    mu = 0
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(hare)
        mu += 1
        if mu > max_steps:
            raise StepLimit(f"no cycle within {max_steps} steps")
    return mu, lam


def trajectory(u, g, max_steps: int = 10**6, kind: str = "theta") -> tuple[int, int]:
    """(t, c): least t, c with map^(t+c)(g) = map^t(g); g is periodic iff t == 0."""
    fn = scalar_map(kind)
    return brent(lambda x: fn(u, x), g, max_steps)


def brent_oracle(G: GroupTable, u: int, kind: str = "theta") -> tuple[np.ndarray, np.ndarray]:
    """Per-element (preperiod, cycle length) using scalar arithmetic only."""
    fn = scalar_map(kind)
    uel = G.element(u)
    memo: dict = {}

    def step(x):
        y = memo.get(x)
        if y is None:
            y = memo[x] = fn(uel, x)
        return y

    pre = np.empty(len(G), dtype=np.int64)
    lens = np.empty(len(G), dtype=np.int64)
    for i in range(len(G)):
        pre[i], lens[i] = brent(step, G.element(i))
    return pre, lens
