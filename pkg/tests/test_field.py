import pytest
from hypothesis import given, settings, strategies as st

from thetaorbits.field import Field, FieldError, default_modulus, get_field, is_irreducible, prime_power

QS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64]


def test_prime_power():
    assert prime_power(64) == (2, 6)
    assert prime_power(27) == (3, 3)
    with pytest.raises(ValueError):
        prime_power(12)
    with pytest.raises(ValueError):
        prime_power(1)


def test_default_moduli():
    # least code, constant term least significant
    assert default_modulus(2, 3) == (1, 1, 0, 1)      # x^3 + x + 1
    assert default_modulus(3, 2) == (1, 0, 1)         # x^2 + 1
    assert default_modulus(2, 4) == (1, 1, 0, 0, 1)   # x^4 + x + 1
    assert get_field(8).format(get_field(8).pow(2, 3)) == "x+1"


def test_reducible_modulus_rejected():
    assert not is_irreducible([1, 0, 1], 2)           # x^2 + 1 = (x+1)^2 over GF(2)
    with pytest.raises(FieldError):
        Field(2, 2, modulus=[1, 0, 1])


@pytest.mark.parametrize("q", QS)
def test_multiplicative_group_cyclic(q):
    F = get_field(q)
    g = F.primitive
    assert F.mult_order(g) == q - 1
    assert {F.pow(g, i) for i in range(q - 1)} == set(range(1, q))


@pytest.mark.parametrize("q", QS)
def test_tables_match_scalar(q):
    F = get_field(q)
    add, mul = F.build_tables()
    for a in range(q):
        for b in range(0, q, max(1, q // 7)):
            assert add[a, b] == F.add(a, b)
            assert mul[a, b] == F._poly_mul_codes(a, b)
        if a:
            assert F.inv(a) == F.inv_fermat(a)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(QS), st.data())
def test_field_axioms(q, data):
    F = get_field(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, -3) == F.inv(F.pow(a, 3))
    # Frobenius is additive
    assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(QS), st.data())
def test_text_round_trip(q, data):
    F = get_field(q)
    a = data.draw(st.integers(0, q - 1))
    assert F.parse(F.format(a)) == a
    assert F.parse(F.serialize(a)) == a


def test_parse_forms():
    F = get_field(9)
    assert F.parse("-1") == F.neg(1)
    assert F.parse("x+2") == F.parse("3^2:2,1")
    G = get_field(7)
    assert G.parse("-1") == 6
    with pytest.raises(FieldError):
        F.parse("3^3:0,0,1")


def test_zero_power_and_squares():
    F = get_field(13)
    with pytest.raises(ZeroDivisionError):
        F.pow(0, -1)
    assert F.is_square(F.neg(1))          # 13 = 1 mod 4
    assert not get_field(7).is_square(6)
    with pytest.raises(FieldError):
        get_field(8).is_square(3)


def test_element_wrapper():
    F = get_field(16)
    x = F.gen
    assert x ** 15 == F.one
    assert (x + x) == F.zero
    assert (x * x.inverse()) == 1
    assert F(str(x)) == x
