import numpy as np
import pytest

from thetaorbits.families import (CapExceeded, SpecError, cached_group, make_group, order_formula,
                                  out_order, parse_spec, suzuki_out_order)
from thetaorbits.subgroups import (centralizer, conjugacy_classes, derived_series, generate,
                                   is_nilpotent, is_normal, is_soluble, lower_central_series,
                                   normal_closure, normalizer, soluble_radical)
from thetaorbits.table import subgroup_table

ORDERS = {
    "A5": 60, "S4": 24, "C12": 12, "D8": 8, "D12": 12, "SL2:3": 24, "SL2:4": 60, "SL2:5": 120,
    "GL2:3": 48, "PSL2:7": 168, "PSL2:9": 360, "PSL3:3": 5616, "SL3:2": 168, "Aff:9": 72,
    "Sz:8": 29120, "prod(C2,A4)": 24, "perm{(1,2,3);(1,2)}": 6, "mat2:3{[[1,1],[0,1]];[[1,0],[1,1]]}": 24,
}


@pytest.mark.parametrize("spec,order", sorted(ORDERS.items()))
def test_orders(spec, order):
    G = cached_group(spec)
    assert len(G) == order
    f = order_formula(spec)
    assert f is None or f == order


@pytest.mark.parametrize("spec", ["A5", "PSL2:7", "Aff:9", "prod(C2,A4)", "SL2:4"])
def test_table_invariants(spec):
    G = cached_group(spec)
    assert np.all(np.diff(G.keys) > 0)
    idx = np.arange(len(G))
    assert np.all(G.mul(idx, G.inv(idx)) == G.identity)
    # round trip through text
    for i in range(0, len(G), max(1, len(G) // 10)):
        assert G.parse(G.format(i)) == i
    # element orders divide the group order
    assert np.all(len(G) % G.orders == 0)


def test_spec_errors():
    for bad in ("Q8", "SL2:6", "D7", "Sz:16", "prod(A5)", "perm{}"):
        with pytest.raises(SpecError):
            make_group(bad)


def test_cap():
    with pytest.raises(CapExceeded):
        make_group("A8", cap=1000)
    with pytest.raises(CapExceeded):
        make_group("perm{(1,2,3,4,5,6,7,8);(1,2)}", cap=500)


def test_out_orders():
    assert out_order(2, 4) == 2
    assert out_order(2, 9) == 4
    assert out_order(3, 2) == 2
    assert suzuki_out_order(8) == 3


def test_a5_classes():
    G = cached_group("A5")
    sizes = sorted(s for _, s in conjugacy_classes(G))
    assert sizes == [1, 12, 12, 15, 20]


def test_centralizer_normalizer():
    G = cached_group("A7")
    u = G.parse("(1,2)(3,4)")
    assert centralizer(G, u).order == 24
    L = generate(G, [G.parse("(1,2,3)"), G.parse("(1,2,3,4,5)")])
    assert L.order == 60
    N = normalizer(G, L)
    assert N.order == 120          # S5 x S2 intersected with A7
    assert is_normal(G, normal_closure(G, [u]))


def test_series():
    S4 = cached_group("S4")
    assert [H.order for H in derived_series(S4)] == [24, 12, 4, 1]
    assert is_soluble(S4) and not is_nilpotent(S4)
    assert [H.order for H in lower_central_series(cached_group("D8"))] == [8, 2, 1]
    assert not is_soluble(cached_group("SL2:5"))


def test_radicals():
    R = soluble_radical(cached_group("prod(A5,S4)"))
    assert (R.radical.order, R.index, R.certified) == (24, 60, True)
    R = soluble_radical(cached_group("SL2:5"))
    assert (R.radical.order, R.certified) == (2, True)
    R = soluble_radical(cached_group("A5"))
    assert R.radical.order == 1 and R.certified


def test_subgroup_table():
    G = cached_group("S5")
    H = generate(G, [G.parse("(1,2,3,4,5)"), G.parse("(2,5)(3,4)")])
    T = subgroup_table(G, H.members, H.generators, spec="D10")
    assert len(T) == 10
    assert np.all(np.diff(T.keys) > 0)


def test_parse_spec_canonical():
    assert parse_spec(" prod( A5 , S4 ) ").text == "prod(A5,S4)"
    assert parse_spec("SL2:7").family == "SL"
    assert parse_spec("PSL3:3").n == 3
