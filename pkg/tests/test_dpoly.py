from fractions import Fraction

import pytest
from hypothesis import given

from algebra.dpoly import (PolyDiffOp, alternating_operator, apply, cup, d_K, function_op, gerstenhaber, hkr,
                           hkr_bracket_sign, hochschild_d, homotopy_h, homotopy_identity, identity_op, insert,
                           is_coboundary, mult_op, product_op, vector_field_op)
from algebra.errors import ArityError, DegreeError, DimensionMismatchError
from algebra.tpoly import coordinate_field, function, vector_field
from .strategies import const, operators, polynomials, x


def test_apply():
    f, g = x(2, 0), x(2, 1)
    assert apply(mult_op(2), [f, g]) == f * g
    assert apply(identity_op(2), [f]) == f
    assert apply(function_op(f), []) == f
    xi = vector_field([x(2, 1), const(2, 0)])
    assert apply(vector_field_op(xi), [x(2, 0) * x(2, 0)]) == (x(2, 0) * x(2, 1)).scale(2)
    with pytest.raises(ArityError):
        apply(mult_op(2), [f])
    with pytest.raises(DimensionMismatchError):
        apply(identity_op(2), [x(1)])


def test_operator_errors():
    with pytest.raises(ArityError):
        mult_op(2) + identity_op(2)
    with pytest.raises(DimensionMismatchError):
        identity_op(2) + identity_op(1)
    with pytest.raises(DegreeError):
        vector_field_op(coordinate_field(2, (0, 1)))


def test_insert_distributes_derivatives():
    xi = vector_field_op(coordinate_field(2, (0,)))
    leibniz = insert(xi, 0, mult_op(2))
    f, g = x(2, 0) * x(2, 0), x(2, 0) * x(2, 1)
    assert apply(leibniz, [f, g]) == (f * g).derivative(0)


def test_cup():
    op = cup(identity_op(2), vector_field_op(coordinate_field(2, (1,))))
    assert op.arity == 2
    assert apply(op, [x(2, 0), x(2, 1)]) == x(2, 0)


@given(polynomials())
def test_functions_and_derivations_are_cocycles(f):
    assert hochschild_d(function_op(f)).is_zero()
    xi = vector_field([f, f * f])
    assert hochschild_d(vector_field_op(xi)).is_zero()


def test_hochschild_of_second_derivative():
    second = PolyDiffOp(1, 1, {((2,),): const(1, 1)})
    out = hochschild_d(second)
    # ±2 f' g'
    assert set(out.terms) == {((1,), (1,))}
    assert abs(out.terms[((1,), (1,))].constant_term()) == 2


def test_multiplication_brackets_to_zero():
    assert gerstenhaber(mult_op(2), mult_op(2)).is_zero()


@given(operators())
def test_hochschild_squares_to_zero(op):
    assert hochschild_d(hochschild_d(op)).is_zero()


@given(operators())
def test_hochschild_is_bracket_with_multiplication(op):
    assert gerstenhaber(mult_op(2), op) == hochschild_d(op)


@given(operators())
def test_d_k_squares_to_zero(op):
    assert d_K(d_K(op)).is_zero()


@given(operators())
def test_homotopy(op):
    assert homotopy_identity(op).is_zero()


def test_homotopy_needs_an_argument():
    with pytest.raises(ArityError):
        homotopy_h(function_op(x(2, 0)))
    assert homotopy_identity(function_op(x(2, 0))).is_zero()


def test_hkr_of_a_bivector():
    op = hkr(coordinate_field(2, (0, 1)))
    assert apply(op, [x(2, 0), x(2, 1)]) == const(2, Fraction(1, 2))
    assert apply(op, [x(2, 1), x(2, 0)]) == const(2, Fraction(-1, 2))
    assert hkr(function(x(2, 0))) == function_op(x(2, 0))


def test_alternating_operator():
    xi = coordinate_field(2, (0,), x(2, 1))
    op = alternating_operator(xi, 3, [2])
    assert op.terms == {((0, 0), (0, 0), (1, 0)): x(2, 1)}
    assert alternating_operator(function(x(2, 0)), 2, []) == product_op(2, 2, x(2, 0))
    with pytest.raises(DegreeError):
        alternating_operator(xi, 2, [0, 1])
    with pytest.raises(ArityError):
        alternating_operator(xi, 2, [2])


def test_coboundaries():
    second = PolyDiffOp(1, 1, {((2,),): x(1)})
    assert is_coboundary(hochschild_d(second))
    assert not is_coboundary(hkr(coordinate_field(2, (0, 1))))
    assert is_coboundary(PolyDiffOp.zero(2, 2))


def test_hkr_is_a_lie_map_on_vector_fields():
    a = coordinate_field(2, (1,), x(2, 0))
    b = coordinate_field(2, (0,), x(2, 1) * x(2, 1))
    assert hkr_bracket_sign(a, b) == 1
