import math

import pytest

from algebra.dpoly import PolyDiffOp, vector_field_op
from algebra.errors import ArityError, DegreeError, UnsupportedOrderError, WeightDimensionError
from algebra.tpoly import VolumeForm, coordinate_field, vector_field
from formality.configuration import configuration_dimension, harmonic_angle, sample_configuration
from formality.graphs import (AdmissibleGraph, enumerate_admissible, eta_profile, ground_arity,
                              merge_multiplicity, profile_graphs)
from formality.stochastic import StochasticOp
from formality.taylor import graph_operator, linf_residual, single, taylor_component
from formality.weights import WeightEstimate, orientation_sign, weight_mc
from .strategies import const, twisted_volume, x

SINGLE_EDGE = AdmissibleGraph(1, 1, ((0, -1),), ())


def test_enumerate_admissible():
    assert enumerate_admissible(1, 1, 0) == [SINGLE_EDGE]
    assert len(enumerate_admissible(1, 2, 0)) == 2
    assert len(enumerate_admissible(2, 2, 0)) == 72
    with pytest.raises(WeightDimensionError):
        enumerate_admissible(1, 0, 1)


def test_graph_bookkeeping():
    graph = AdmissibleGraph(2, 2, ((0, 1), (0, -1), (1, -2), (1, -1)), ())
    assert graph.star(0) == [1, -1]
    assert graph.profile() == ((2, 0), (2, 0))
    assert graph.form_count() == graph.dimension() == 4
    dashed = AdmissibleGraph(1, 3, ((0, -2),), ((0, 1),))
    assert dashed.forms() == [(0, -2), (0, -1), (0, -2)]
    assert dashed.profile() == ((1, 1),)
    with pytest.raises(WeightDimensionError):
        AdmissibleGraph(1, 1, ((0, 0),), ()).validate()
    with pytest.raises(WeightDimensionError):
        AdmissibleGraph(1, 2, (), ((0, 2),)).validate()


def test_profiles():
    assert ground_arity(((2, 0), (2, 0))) == 2
    assert ground_arity(((1, 1),)) == 3
    assert merge_multiplicity(1, 1) == 2
    assert len(profile_graphs(1, 1, ((1, 0),))) == 1
    eta = single(coordinate_field(2, (0, 1)), 1)
    assert eta_profile([eta]) == ((2, 1),)


def test_configuration_space():
    assert configuration_dimension(2, 2) == 4
    with pytest.raises(WeightDimensionError):
        configuration_dimension(0, 1)
    point, jacobian = sample_configuration(2, 3, 5)
    assert all(p.imag > 0 for p in point.p)
    assert point.q[0] == 0.0 and point.q[-1] == 1.0
    assert jacobian > 0


def test_harmonic_angle():
    assert harmonic_angle(1j, 1) == pytest.approx(-math.pi / 2)
    assert harmonic_angle(1j, 0) == pytest.approx(math.pi)
    with pytest.raises(ValueError):
        harmonic_angle(1j, 1j)


def test_single_edge_weight_is_exact():
    estimate = weight_mc(SINGLE_EDGE, 2000, 0)
    assert estimate.value == pytest.approx(1.0, abs=1e-9)
    assert estimate.std_error < 1e-9
    assert weight_mc(SINGLE_EDGE, 2000, 0) is estimate


def test_weight_edge_cases():
    with pytest.raises(WeightDimensionError):
        weight_mc(AdmissibleGraph(1, 2, ((0, -1),), ()), 100, 0)
    assert weight_mc(AdmissibleGraph(1, 2, ((0, -1), (0, -1)), ()), 100, 0).value == 0.0
    assert weight_mc(AdmissibleGraph(1, 0, (), ()), 100, 0).value == 1.0
    assert orientation_sign(3) == -1 and orientation_sign(2) == 1 and orientation_sign(1) == 1


def test_weights_depend_only_on_their_inputs():
    graph = AdmissibleGraph(2, 2, ((0, 1), (0, -1), (1, -2), (1, -1)), ())
    a = weight_mc(graph, 3000, 11, 2)
    weight_mc.cache_clear()
    b = weight_mc(graph, 3000, 11, 2)
    assert a == b


def test_graph_operator_of_a_single_edge():
    xi = vector_field([x(2, 1), const(2, 3)])
    assert graph_operator(SINGLE_EDGE, [single(xi)]) == vector_field_op(xi)
    with pytest.raises(DegreeError):
        graph_operator(SINGLE_EDGE, [single(coordinate_field(2, (0, 1)))])


def test_first_taylor_component_is_the_vector_field():
    xi = vector_field([x(2, 1), const(2, 3)])
    component = taylor_component(1, [single(xi)], 1, 1000, 0)
    assert not component.is_exact()
    assert (component - vector_field_op(xi)).consistent_with_zero()
    assert taylor_component(1, [single(xi)], 2, 1000, 0).exact.is_zero()
    with pytest.raises(ArityError):
        taylor_component(2, [single(xi)], 1, 1000, 0)


def test_stochastic_operators():
    op = vector_field_op(coordinate_field(2, (0,)))
    exact = StochasticOp(op)
    assert exact.is_exact() and exact.max_deviation() == math.inf
    noisy = StochasticOp(PolyDiffOp.zero(2, 1), {'g': (WeightEstimate(0.01, 0.01, 100, 0), op)})
    assert noisy.consistent_with_zero(nsigma=3)
    assert not noisy.consistent_with_zero(nsigma=0.5)
    assert noisy.max_deviation() == pytest.approx(1.0)
    assert StochasticOp(op, {'g': (WeightEstimate(0.0, 0.0, 100, 0), op)}).is_exact()
    doubled = noisy + noisy
    assert doubled.coefficients()[(((1, 0),), (0, 0))][0] == pytest.approx(0.02)
    with pytest.raises(ArityError):
        StochasticOp(op, {'g': (WeightEstimate(1.0, 0.0, 1, 0), PolyDiffOp.zero(2, 2))})


def test_linf_at_one_insertion_is_the_chain_map():
    xi = vector_field([x(2, 0) * x(2, 1), x(2, 1)])
    for vol in (VolumeForm.standard(2), twisted_volume()):
        assert linf_residual(1, [single(xi)], 1, vol).exact.is_zero()
        assert linf_residual(1, [single(coordinate_field(2, (0, 1)))], 2, vol).exact.is_zero()


def test_linf_limits():
    eta = single(coordinate_field(2, (0, 1)))
    vol = VolumeForm.standard(2)
    with pytest.raises(UnsupportedOrderError):
        linf_residual(2, [eta, eta], 2, vol, mode='exact')
    with pytest.raises(UnsupportedOrderError):
        linf_residual(3, [eta, eta, eta], 2, vol, mode='mc')
    with pytest.raises(ArityError):
        linf_residual(2, [eta], 2, vol, mode='mc')


@pytest.mark.slow
def test_linf_at_two_insertions():
    eta = single(coordinate_field(2, (0, 1)))
    residual = linf_residual(2, [eta, eta], 2, VolumeForm.standard(2), mode='mc', samples=50000, seed=3)
    assert residual.consistent_with_zero(nsigma=5)
