import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from thetaorbits.families import cached_group
from thetaorbits.orbits import (StepLimit, beta, beta_profile, brent, brent_oracle, build_graph,
                                cycle_structure, eventual_orbits, orbit_report, product_cycle_count,
                                quotient_cycle_structure, trajectory)
from thetaorbits.subgroups import conjugacy_class, coset_labels, normal_closure


def theta_idx(G, u, g):
    return G.comm(G.conj(G.inv(g), u), g)


@pytest.mark.parametrize("spec", ["A5", "S5", "PSL2:7", "SL2:5", "Sz:8", "prod(A5,S4)"])
def test_conjugation_equivariance(spec):
    G = cached_group(spec)
    rng = np.random.default_rng(7)
    u, g, h = (rng.integers(0, len(G), 10_000) for _ in range(3))
    left = theta_idx(G, G.conj(u, h), G.conj(g, h))
    right = G.conj(theta_idx(G, u, g), h)
    assert np.array_equal(left, right)


@pytest.mark.parametrize("spec", ["A5", "S5", "PSL2:7", "SL2:5", "Aff:8"])
def test_beta_is_a_class_function(spec):
    G = cached_group(spec)
    betas = np.array([beta(G, u) for u in range(len(G))])
    done = np.zeros(len(G), dtype=bool)
    for x in range(len(G)):
        if done[x]:
            continue
        cls = conjugacy_class(G, x)
        done[cls] = True
        assert len(set(betas[cls].tolist())) == 1


def test_graph_matches_scalar_map():
    G = cached_group("PSL2:8")
    u = G.parse("[[0,1],[1,0]]")
    succ = build_graph(G, "theta", u).successor
    from thetaorbits.orbits import theta, engel
    ue = G.element(u)
    for i in range(0, len(G), 7):
        assert G.index_of(theta(ue, G.element(i))) == succ[i]
    esucc = build_graph(G, "engel", u).successor
    for i in range(0, len(G), 11):
        assert G.index_of(engel(ue, G.element(i))) == esucc[i]


@pytest.mark.parametrize("spec", ["A5", "PSL2:13", "Sz:8"])
def test_bijection_on_eventual_set(spec):
    G = cached_group(spec)
    u = int(np.flatnonzero(G.orders == 2)[0])
    g = build_graph(G, "theta", u)
    r = eventual_orbits(g)
    img = g.successor[r.periodic]
    assert np.array_equal(np.sort(img), r.periodic)
    assert sum(c.length for c in r.cycles) == r.theta_set_size
    for c in r.cycles:
        assert c.rep == c.members.min()
        assert np.array_equal(g.successor[c.members], np.roll(c.members, -1))


def test_worker_count_does_not_change_output():
    G = cached_group("A9")              # more than one chunk
    u = G.parse("(1,2)(3,4)")
    a = build_graph(G, "theta", u, workers=1).successor
    b = build_graph(G, "theta", u, workers=3).successor
    assert np.array_equal(a, b)


def test_a5_report_record():
    G = cached_group("A5")
    r = orbit_report(G, G.parse("(1,2)(3,4)"))
    rec = r.to_record(G, with_members=True)
    assert rec["beta"] == 8
    assert rec["histogram"] == [[2, 4], [4, 4]]
    assert len(rec["cycles"]) == 8
    assert rec["preperiod_max"] == 2


def test_soluble_groups_have_trivial_profiles():
    for spec in ("S4", "SL2:3", "Aff:9"):
        assert beta_profile(cached_group(spec), "all").all_zero()


def test_brent_oracle_agrees_psl27():
    G = cached_group("PSL2:7")
    u = int(np.flatnonzero(G.orders == 2)[0])
    r = orbit_report(G, u)
    pre, lens = brent_oracle(G, u)
    assert set(np.flatnonzero(pre == 0).tolist()) == set(r.periodic.tolist())
    assert int(pre.max()) == r.preperiod_max


def test_trajectory_identity():
    G = cached_group("A5")
    assert trajectory(G.element(5), G.element(G.identity)) == (0, 1)


def test_brent_step_limit():
    with pytest.raises(StepLimit):
        brent(lambda x: x + 1, 0, max_steps=100)


def test_quotient_cycles():
    G = cached_group("SL2:7")
    Z = normal_closure(G, [G.parse("[[6,0],[0,6]]")])
    lab = coset_labels(G, Z)
    u = G.parse("[[0,1],[6,0]]")
    g = build_graph(G, "theta", u)
    q = quotient_cycle_structure(g, lab)
    assert len(q.cycles) - 1 == eventual_orbits(g).beta
    with pytest.raises(AssertionError):
        bad = np.arange(len(G)) % 2     # not a union of cosets
        quotient_cycle_structure(g, bad)


# -- properties of the functional-graph machinery on random maps -----------------------

def naive_cycles(succ):
    seen_cycles = set()
    for x in range(len(succ)):
        path = {}
        y = x
        while y not in path:
            path[y] = len(path)
            y = succ[y]
        cyc = []
        z = y
        while True:
            cyc.append(z)
            z = succ[z]
            if z == y:
                break
        seen_cycles.add(min(cyc))
    return seen_cycles


def naive_preperiod(succ):
    out = 0
    for x in range(len(succ)):
        seen = []
        y = x
        while y not in seen:
            seen.append(y)
            y = succ[y]
        out = max(out, seen.index(y))
    return out


maps = st.integers(1, 60).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n, max_size=n))


@settings(max_examples=200, deadline=None)
@given(maps)
def test_cycle_structure_random(succ):
    cs = cycle_structure(np.array(succ))
    assert {c.rep for c in cs.cycles} == naive_cycles(succ)
    assert cs.preperiod_max == naive_preperiod(succ)


@settings(max_examples=200, deadline=None)
@given(maps, st.data())
def test_brent_random(succ, data):
    x0 = data.draw(st.integers(0, len(succ) - 1))
    mu, lam = brent(lambda x: succ[x], x0)
    seq = [x0]
    for _ in range(mu + lam):
        seq.append(succ[seq[-1]])
    assert seq[mu] == seq[mu + lam]
    assert len(set(seq[:mu + lam])) == mu + lam


@settings(max_examples=100, deadline=None)
@given(maps, maps)
def test_product_map_cycle_count(f, g):
    f, g = np.array(f), np.array(g)
    n = len(g)
    prod = (f[:, None] * n + g[None, :]).reshape(-1)
    got = len(cycle_structure(prod).cycles)
    lf = [c.length for c in cycle_structure(f).cycles]
    lg = [c.length for c in cycle_structure(g).cycles]
    assert got == product_cycle_count(lf, lg)
    assert got >= len(lf) * len(lg)


def test_product_count_example():
    # an A5 census factor squared
    lens = [1] + [2] * 4 + [4] * 4
    assert product_cycle_count(lens, lens) == 177
    assert product_cycle_count(lens, [1]) == 9
    assert math.prod([9, 9]) == 81
