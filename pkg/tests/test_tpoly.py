import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.errors import DegreeError, DimensionMismatchError
from algebra.polynomial import Polynomial
from algebra.tpoly import (PolyVector, UPolyElement, VolumeForm, apply_vector_field, check_poisson,
                           coordinate_field, d_div, divergence, divergence_wedge_residual, divergence_wedge_signs,
                           function, lie_bracket, random_polyvector, schouten_bracket, theta, u_bracket, vector_field,
                           wedge)
from .strategies import const, polynomials, polyvectors, seeds, twisted_volume, x


def test_components_are_antisymmetric():
    pv = coordinate_field(2, (1, 0), x(2, 0))
    assert pv.components == {(0, 1): -x(2, 0)}
    assert pv.component((1, 0)) == x(2, 0)
    assert coordinate_field(2, (0, 0)).is_zero()
    assert wedge(coordinate_field(2, (0,)), coordinate_field(2, (1,))) == \
        -wedge(coordinate_field(2, (1,)), coordinate_field(2, (0,)))


def test_polyvector_errors():
    with pytest.raises(DegreeError):
        PolyVector(2, 2, {(0,): const(2, 1)})
    with pytest.raises(DegreeError):
        coordinate_field(2, (0,)) + coordinate_field(2, (0, 1))
    with pytest.raises(DegreeError):
        coordinate_field(2, (0,)).function_value()
    with pytest.raises(DimensionMismatchError):
        PolyVector(2, 1, {(0,): x(1)})


def test_schouten_of_vector_fields_is_lie_bracket():
    a = coordinate_field(2, (1,), x(2, 0))
    b = coordinate_field(2, (0,), x(2, 1))
    expected = vector_field([x(2, 0), -x(2, 1)])
    assert lie_bracket(a, b) == expected
    assert schouten_bracket(a, b) == expected


def test_schouten_with_functions():
    xi = vector_field([x(2, 1), const(2, 2)])
    f = x(2, 0) * x(2, 1)
    assert schouten_bracket(xi, function(f)) == function(apply_vector_field(xi, f))
    assert schouten_bracket(function(f), xi) == -function(apply_vector_field(xi, f))
    assert schouten_bracket(function(f), function(f)).is_zero()


@given(polyvectors(), polyvectors())
def test_schouten_graded_antisymmetry(a, b):
    sign = 1 if ((a.degree - 1) * (b.degree - 1)) % 2 else -1
    assert schouten_bracket(a, b) == schouten_bracket(b, a).scale(sign)


def test_divergence_contracts_the_last_index():
    vol = VolumeForm.standard(2)
    pv = coordinate_field(2, (0, 1), x(2, 0) * x(2, 1))
    assert divergence(pv, vol) == vector_field([x(2, 0), -x(2, 1)])
    assert divergence(coordinate_field(1, (0,), x(1)), VolumeForm.standard(1)) == function(const(1, 1))
    assert divergence(function(x(2, 0)), vol).is_zero()


def test_divergence_with_log_density():
    vol = VolumeForm(1, x(1))
    assert divergence(coordinate_field(1, (0,)), vol) == function(const(1, 1))
    assert not vol.is_standard()
    with pytest.raises(DimensionMismatchError):
        VolumeForm(2, x(1))


@given(st.integers(1, 2), seeds, st.booleans())
def test_divergence_squares_to_zero(degree, seed, twisted):
    vol = twisted_volume() if twisted else VolumeForm.standard(2)
    a = random_polyvector(2, degree, 2, seed)
    assert divergence(divergence(a, vol), vol).is_zero()


@given(polyvectors(), polyvectors(), st.integers(0, 1), st.integers(0, 1), st.booleans())
def test_d_div_is_a_derivation_of_the_bracket(a, b, k1, k2, twisted):
    vol = twisted_volume() if twisted else VolumeForm.standard(2)
    e1, e2 = UPolyElement.single(a, k1), UPolyElement.single(b, k2)
    assert d_div(d_div(e1, vol), vol).is_zero()
    parity = -1 if e1.grading() % 2 else 1
    lhs = d_div(u_bracket(e1, e2), vol)
    rhs = u_bracket(d_div(e1, vol), e2) + u_bracket(e1, d_div(e2, vol)).scale(parity)
    assert lhs == rhs


@given(st.integers(0, 3), st.integers(0, 3), seeds)
def test_divergence_of_a_wedge(deg_a, deg_b, seed):
    a = random_polyvector(3, deg_a, 2, seed)
    b = random_polyvector(3, deg_b, 2, seed + 1)
    assert divergence_wedge_residual(a, b, VolumeForm.standard(3)).is_zero()


@given(polyvectors(), polyvectors())
def test_divergence_of_a_wedge_with_a_density(a, b):
    assert divergence_wedge_residual(a, b, twisted_volume()).is_zero()


def test_divergence_of_a_wedge_signs():
    assert divergence_wedge_signs(1, 1) == (1, -1, -1)
    assert divergence_wedge_signs(1, 2) == (-1, -1, 1)
    assert divergence_wedge_signs(0, 1) == (1, -1, -1)
    with pytest.raises(DegreeError):
        divergence_wedge_signs(-1, 1)


def test_divergence_of_a_wedge_of_vector_fields():
    # [∂x, x∂y] = ∂y and div(x ∂x∧∂y) = -∂y
    a, b = coordinate_field(2, (0,)), coordinate_field(2, (1,), x(2, 0))
    assert divergence(wedge(a, b), VolumeForm.standard(2)) == -coordinate_field(2, (1,))
    assert divergence_wedge_residual(a, b, VolumeForm.standard(2)).is_zero()
    assert schouten_bracket(a, b) == coordinate_field(2, (1,))


def test_check_poisson():
    vol = VolumeForm.standard(2)
    report = check_poisson(coordinate_field(2, (0, 1), const(2, 3)), vol)
    assert report.ok
    report = check_poisson(coordinate_field(2, (0, 1), x(2, 0)), vol)
    assert report.jacobi_ok and not report.div_free and not report.ok
    assert report.as_dict() == {'jacobi_ok': True, 'div_free': False}
    with pytest.raises(DegreeError):
        check_poisson(coordinate_field(2, (0,)), vol)


def test_u_graded_elements():
    e = theta(2, 1)
    assert e.items() == [(1, coordinate_field(2, (0, 1)))]
    assert e.grading() == 3
    assert d_div(e, VolumeForm.standard(2)).is_zero()
    mixed = UPolyElement.from_terms(2, [(0, function(x(2, 0))), (0, coordinate_field(2, (0,)))])
    assert not mixed.is_homogeneous()
    with pytest.raises(DegreeError):
        mixed.grading()
    cancelled = UPolyElement.from_terms(2, [(0, function(x(2, 0))), (0, function(-x(2, 0)))])
    assert cancelled.is_zero()
    with pytest.raises(DimensionMismatchError):
        d_div(e, VolumeForm.standard(1))


def test_d_div_raises_the_u_power():
    xi = coordinate_field(2, (0,), x(2, 0))
    out = d_div(UPolyElement.single(xi, 1), VolumeForm.standard(2))
    assert out.items() == [(2, function(const(2, 1)))]


@given(polynomials(), polynomials())
def test_function_wedge_is_product(f, g):
    assert wedge(function(f), function(g)) == function(f * g)


def test_polynomial_coefficients_are_exact():
    half = Polynomial(2, {(0, 0): '1/2'})
    assert coordinate_field(2, (0, 1), half).scale(2) == coordinate_field(2, (0, 1))
