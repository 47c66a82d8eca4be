"""Hypothesis strategies for the algebraic objects.

Random inputs are drawn from integer seeds so that a failing example shrinks
to a seed that reproduces it through the library's own generators.
"""
from hypothesis import strategies as st

from algebra.dpoly import random_operator
from algebra.polynomial import Polynomial, random_polynomial
from algebra.tpoly import VolumeForm, random_polyvector

seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)


@st.composite
def polynomials(draw, dim=2, max_degree=2):
    return random_polynomial(dim, max_degree, draw(seeds))


@st.composite
def polyvectors(draw, dim=2, degree=None, max_poly_degree=2):
    degree = draw(st.integers(0, dim)) if degree is None else degree
    return random_polyvector(dim, degree, max_poly_degree, draw(seeds))


@st.composite
def operators(draw, dim=2, arity=None, max_order=2, max_poly_degree=1):
    arity = draw(st.integers(1, 2)) if arity is None else arity
    return random_operator(dim, arity, max_order, max_poly_degree, draw(seeds))


def x(dim, i=0):
    return Polynomial.variable(dim, i)


def const(dim, value):
    return Polynomial.constant(dim, value)


def twisted_volume():
    """e^{xy/2 + x} dx dy."""
    return VolumeForm(2, Polynomial(2, {(1, 1): '1/2', (1, 0): 1}))
