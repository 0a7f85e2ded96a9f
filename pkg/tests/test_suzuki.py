import pytest
from hypothesis import given, settings, strategies as st

from thetaorbits.elements import ElementError
from thetaorbits.families import cached_group
from thetaorbits.orbits import theta, trajectory
from thetaorbits.suzuki import (SuzukiParams, in_borel, suzuki_compose, suzuki_D, suzuki_decompose,
                                suzuki_normal_form, suzuki_T, suzuki_z)

P8 = SuzukiParams.from_q(8)
P32 = SuzukiParams.from_q(32)


def test_params():
    assert (P8.q, P8.s, P8.d_exponent) == (8, 4, 3)
    assert (P32.q, P32.s) == (32, 8)
    assert P8.s ** 2 == 2 * P8.q
    for bad in (4, 16, 12, 2):
        with pytest.raises(ElementError):
            SuzukiParams.from_q(bad)


def test_generators_preserve_group():
    G = cached_group("Sz:8")
    assert len(G) == P8.order == 29120
    z = suzuki_z(P8)
    assert (z * z).is_identity()
    assert G.index_of(z) >= 0


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([P8, P32]), st.data())
def test_t_laws(P, data):
    F, s, q = P.field, P.s, P.q
    a, b, c, d = (data.draw(st.integers(0, q - 1)) for _ in range(4))
    lhs = suzuki_T(a, b, P) * suzuki_T(c, d, P)
    assert lhs == suzuki_T(F.add(a, c), F.add(F.add(F.mul(a, F.pow(c, s)), b), d), P)
    assert suzuki_T(a, b, P).inverse() == suzuki_T(a, F.add(F.pow(a, s + 1), b), P)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([P8, P32]), st.data())
def test_decompose_round_trip(P, data):
    q = P.q
    a, b, c, d = (data.draw(st.integers(0, q - 1)) for _ in range(4))
    k = data.draw(st.integers(1, q - 1))
    E = suzuki_compose(a, b, k, c, d, P)
    assert not in_borel(E)
    assert suzuki_decompose(E, P) == (a, b, k, c, d)


def test_borel_has_no_factorization():
    with pytest.raises(ElementError):
        suzuki_decompose(suzuki_T(3, 5, P8) * suzuki_D(2, P8), P8)


def test_normal_form_is_conjugation_invariant():
    # conjugating by T(e,f) commutes with u = T(0,1), so the normal form only sees the class
    x = suzuki_T(0, 3, P8) * suzuki_D(5, P8) * suzuki_z(P8)
    base = suzuki_normal_form(x, P8)
    for e in range(8):
        for f in range(8):
            h = suzuki_T(e, f, P8)
            assert suzuki_normal_form(h.inverse() * x * h, P8) == base
    assert base == (0, 3, 5)


def test_b_alternates_along_trajectory():
    F = P8.field
    u = suzuki_T(0, 1, P8)
    for b in range(2, 8):
        x = suzuki_T(0, b, P8) * suzuki_z(P8)
        mu, lam = trajectory(u, x)
        assert lam >= 1
        g, cur = x, b
        for _ in range(mu + lam):
            g = theta(u, g)
            A, B, _ = suzuki_normal_form(g, P8)
            assert A == 0 and B == F.add(cur, 1)
            cur = B
