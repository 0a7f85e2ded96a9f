import pytest
from hypothesis import given, settings, strategies as st

from thetaorbits.elements import (ElementError, MatrixElt, Permutation, ProjectiveMatrix, comm,
                                  conj, elt_order, is_two_element, power)
from thetaorbits.field import get_field


def perms(n):
    return st.permutations(list(range(n))).map(Permutation)


def test_cycle_notation():
    p = Permutation.parse("(1,2)(3,4)", 5)
    assert str(p) == "(1,2)(3,4)"
    assert Permutation.parse("(1 2)(3 4)", 5) == p
    assert Permutation.parse("()", 3).is_identity()
    assert p.cycle_type() == (2, 2)
    assert p.sign() == 1
    with pytest.raises(ElementError):
        Permutation.parse("(1,2,1)")
    with pytest.raises(ElementError):
        Permutation.parse("(1,7)", 5)
    with pytest.raises(ElementError):
        Permutation.parse("1,2")


def test_product_applies_left_first():
    a = Permutation.parse("(1,2)", 3)
    b = Permutation.parse("(2,3)", 3)
    # 1 -a-> 2 -b-> 3
    assert str(a * b) == "(1,3,2)"


def test_cycles_start_at_least_point():
    p = Permutation.parse("(5,3,4,2,1)", 5)
    assert p.cycles() == [(1, 5, 3, 4, 2)]


@settings(max_examples=100, deadline=None)
@given(perms(6), perms(6), perms(6))
def test_group_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity()
    assert comm(x, y) == x.inverse() * y.inverse() * x * y
    assert conj(x, y) == y.inverse() * x * y
    # [x, y]^z = [x^z, y^z]
    assert conj(comm(x, y), z) == comm(conj(x, z), conj(y, z))
    assert power(x, elt_order(x)).is_identity()


def test_matrix_parse_and_arith():
    F = get_field(9)
    m = MatrixElt.parse("[[0,1],[-1,0]]", F, 2)
    assert m.det() == 1
    assert (m * m) == MatrixElt.identity(F, 2).scale(F.neg(1))
    assert elt_order(m) == 4 and is_two_element(m)
    assert MatrixElt.parse("0,1;2,0", F, 2) == m
    assert str(MatrixElt.parse(str(m), F, 2)) == str(m)
    with pytest.raises(ElementError):
        MatrixElt.parse("[[1,1],[1,1]]", F, 2)
    with pytest.raises(ElementError):
        MatrixElt.parse("[[1,0],[0,1]]", F, 3)


def test_matrix_inverse_extension_field():
    F = get_field(16)
    m = MatrixElt.parse("[[x,1],[1,0]]", F, 2)
    assert (m * m.inverse()).is_identity()
    assert (m.inverse() * m).is_identity()


def test_projective_canonical_rep():
    F = get_field(7)
    m = MatrixElt.parse("[[3,0],[0,5]]", F, 2)
    assert ProjectiveMatrix(m) == ProjectiveMatrix(m.scale(F.neg(1)))
    assert ProjectiveMatrix(m * m.inverse()).is_identity()


def test_mixed_kinds_rejected():
    F = get_field(5)
    with pytest.raises((ElementError, TypeError)):
        comm(Permutation.identity(3), MatrixElt.identity(F, 2))
