from fractions import Fraction

import pytest
from hypothesis import given

from algebra.cyclic import (bicomplex_square_check, cyclic_power, cyclic_shift, integral_normal_form, is_cyclic,
                            proportionality, rotate_slots, sigma, sigma_defect, sigma_defect_relation,
                            sigma_projector, specialize_unit)
from algebra.dpoly import PolyDiffOp, identity_op, mult_op, product_op, vector_field_op
from algebra.errors import ArityError, DimensionMismatchError
from algebra.tpoly import VolumeForm, coordinate_field, divergence, vector_field
from .strategies import const, operators, twisted_volume, x


def test_cyclic_shift_of_a_vector_field(vol2):
    xi = vector_field([x(2, 1) * x(2, 0), x(2, 0)])
    div = divergence(xi, vol2).function_value()
    assert cyclic_shift(vector_field_op(xi), vol2) == vector_field_op(xi) + product_op(2, 1, div)
    assert sigma_projector(vector_field_op(xi), vol2) == vector_field_op(xi) + product_op(2, 1, div.scale(Fraction(1, 2)))


def test_integration_by_parts():
    vol = VolumeForm.standard(1)
    derivative_first = PolyDiffOp(1, 2, {((1,), (0,)): const(1, 1)})
    derivative_second = PolyDiffOp(1, 2, {((0,), (1,)): const(1, -1)})
    assert integral_normal_form(derivative_first, vol) == integral_normal_form(derivative_second, vol)
    assert not integral_normal_form(derivative_first, vol).is_zero()


def test_normal_form_needs_matching_dimension():
    with pytest.raises(DimensionMismatchError):
        integral_normal_form(mult_op(2), VolumeForm.standard(1))


@given(operators())
def test_cyclic_power_is_identity(op):
    for vol in (VolumeForm.standard(2), twisted_volume()):
        assert cyclic_power(op, vol, op.arity + 1) == op


@given(operators(max_order=1))
def test_one_minus_c_kills_sigma(op):
    vol = twisted_volume()
    s = sigma(op, vol)
    assert (s - cyclic_shift(s, vol)).is_zero()
    assert sigma(op - cyclic_shift(op, vol), vol).is_zero()
    assert is_cyclic(sigma_projector(op, vol), vol)


@given(operators(max_order=1))
def test_bicomplex_squares_commute(op):
    for vol in (VolumeForm.standard(2), twisted_volume()):
        assert bicomplex_square_check(op, vol) == {'star1_ok': True, 'star2_ok': True}


def test_multiplication_is_cyclic(vol2):
    assert is_cyclic(mult_op(2), vol2)
    assert cyclic_shift(identity_op(2), vol2) == -identity_op(2)


def test_rotate_and_specialize():
    op = PolyDiffOp(2, 3, {((1, 0), (0, 0), (0, 1)): x(2, 0)})
    assert rotate_slots(op, 3) == op
    assert rotate_slots(op, 1).terms == {((0, 1), (1, 0), (0, 0)): x(2, 0)}
    assert specialize_unit(op, 1) == PolyDiffOp(2, 2, {((1, 0), (0, 1)): x(2, 0)})
    assert specialize_unit(op, 0).is_zero()
    assert specialize_unit(mult_op(2), 1) == identity_op(2)
    with pytest.raises(ArityError):
        specialize_unit(op, 3)


def test_sigma_defect_needs_an_argument():
    with pytest.raises(ArityError):
        sigma_defect(product_op(2, 0, x(2, 0)))
    assert sigma_defect(identity_op(2)).arity == 3


def test_proportionality():
    op = vector_field_op(coordinate_field(2, (0,), x(2, 1)))
    assert proportionality(op.scale(3), op) == 3
    assert proportionality(PolyDiffOp.zero(2, 1), op) is None
    assert proportionality(op, PolyDiffOp.zero(2, 1)) is None
    assert proportionality(PolyDiffOp.zero(2, 1), PolyDiffOp.zero(2, 1)) == 0
    assert proportionality(op, identity_op(2)) is None
    assert proportionality(op + identity_op(2), op + identity_op(2).scale(2)) is None


def test_sigma_defect_ratio_has_unit_magnitude(vol2):
    ratios = [sigma_defect_relation(identity_op(2), vol2),
              sigma_defect_relation(mult_op(2).times(x(2, 0)), vol2)]
    assert all(r is not None and abs(r) == 1 for r in ratios)
    assert len(set(ratios)) == 1
