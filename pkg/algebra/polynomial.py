"""Exact sparse multivariate polynomials over the rationals.

A Polynomial is an immutable map from exponent tuples (MultiIndex) to
fractions.Fraction coefficients. Zero coefficients are never stored, so two
polynomials are equal exactly when their term maps are equal.

The module-level functions <poly_add>, <poly_mul>, <partial_derivative> and
<random_polynomial> are the public operations; the class methods are the
building blocks the rest of the package uses.
"""
import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .errors import AxisError, DimensionMismatchError


def zero_index(dim):
    """Return the zero multi-index of length <dim>."""
    return (0,) * dim


def unit_index(dim, i):
    """Return the multi-index e_i of length <dim>."""
    exps = [0] * dim
    exps[i] = 1
    return tuple(exps)


def add_indices(a, b):
    return tuple(x + y for x, y in zip(a, b))


def index_order(alpha):
    """Total order |alpha| of a multi-index."""
    return sum(alpha)


@lru_cache(maxsize=None)
def multi_indices(dim, max_order):
    """All multi-indices of length <dim> with total order <= <max_order>, sorted."""
    return tuple(sorted(
        exps for exps in itertools.product(range(max_order + 1), repeat=dim)
        if sum(exps) <= max_order))


@lru_cache(maxsize=None)
def _compositions(total, parts):
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def leibniz_splits(alpha, parts):
    """Split the derivative ∂^alpha over a product of <parts> factors.

    Returns a tuple of (multinomial coefficient, tuple of <parts> multi-indices)
    such that ∂^alpha(u_1 ... u_parts) = Σ coeff · ∏ ∂^{beta_r} u_r.
    """
    per_axis = []
    for a in alpha:
        options = []
        for comp in _compositions(a, parts):
            mult = factorial(a)
            for c in comp:
                mult //= factorial(c)
            options.append((mult, comp))
        per_axis.append(options)
    out = []
    for choice in itertools.product(*per_axis):
        mult = 1
        for m, _ in choice:
            mult *= m
        betas = tuple(tuple(comp[r] for _, comp in choice) for r in range(parts))
        out.append((mult, betas))
    return tuple(out)


def _to_fraction(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class Polynomial:
    """Sparse polynomial in x_0, ..., x_{dim-1} with exact rational coefficients."""

    __slots__ = ('dim', 'terms', '_hash')

    def __init__(self, dim, terms=None):
        """Build a normalized polynomial.

        Parameters:
            dim (int)    -- ambient dimension d
            terms (dict) -- map from exponent tuples of length d to rational-like coefficients
        """
        self.dim = dim
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != dim:
                raise DimensionMismatchError('monomial %s does not have length %d' % (exps, dim))
            if any(e < 0 for e in exps):
                raise ValueError('negative exponent in %s' % (exps,))
            coeff = _to_fraction(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def constant(cls, dim, value):
        return cls(dim, {zero_index(dim): value})

    @classmethod
    def variable(cls, dim, i):
        if not 0 <= i < dim:
            raise AxisError('axis %d out of range for dimension %d' % (i, dim))
        return cls(dim, {unit_index(dim, i): 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def _raw(cls, dim, terms):
        # terms already normalized
        poly = cls.__new__(cls)
        poly.dim = dim
        poly.terms = terms
        poly._hash = None
        return poly

    # predicates
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(exps) for exps in self.terms)

    def total_degree(self):
        """Maximal total degree of a monomial; -1 for the zero polynomial."""
        return max((sum(exps) for exps in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get(zero_index(self.dim), Fraction(0))

    def _check(self, other):
        if self.dim != other.dim:
            raise DimensionMismatchError('dimension mismatch: %d vs %d' % (self.dim, other.dim))

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dim, other)
        self._check(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            value = out.get(exps, 0) + coeff
            if value:
                out[exps] = value
            else:
                out.pop(exps, None)
        return Polynomial._raw(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.dim, {exps: -c for exps, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dim, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        factor = _to_fraction(factor)
        if not factor:
            return Polynomial.zero(self.dim)
        return Polynomial._raw(self.dim, {exps: c * factor for exps, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = add_indices(e1, e2)
                value = out.get(exps, 0) + c1 * c2
                if value:
                    out[exps] = value
                else:
                    out.pop(exps, None)
        return Polynomial._raw(self.dim, out)

    def __rmul__(self, other):
        return self.scale(other)

    def derivative(self, i):
        """Formal ∂/∂x_i."""
        if not 0 <= i < self.dim:
            raise AxisError('axis %d out of range for dimension %d' % (i, self.dim))
        out = {}
        for exps, coeff in self.terms.items():
            if exps[i]:
                lowered = exps[:i] + (exps[i] - 1,) + exps[i + 1:]
                out[lowered] = coeff * exps[i]
        return Polynomial._raw(self.dim, out)

    def derive(self, alpha):
        """Apply ∂^alpha for a multi-index <alpha>."""
        out = {}
        for exps, coeff in self.terms.items():
            if any(e < a for e, a in zip(exps, alpha)):
                continue
            factor = 1
            for e, a in zip(exps, alpha):
                for j in range(a):
                    factor *= e - j
            out[tuple(e - a for e, a in zip(exps, alpha))] = coeff * factor
        return Polynomial._raw(self.dim, out)

    def evaluate(self, point):
        """Evaluate at a point given as a sequence of rationals."""
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for x, e in zip(point, exps):
                value *= Fraction(x) ** e
            total += value
        return total

    # identity
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.dim == other.dim and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial.constant(self.dim, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return '0'
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = ['x%d^%d' % (i, e) if e > 1 else 'x%d' % i
                       for i, e in enumerate(exps) if e]
            if not factors:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append('*'.join(factors))
            else:
                pieces.append('(%s)*%s' % (coeff, '*'.join(factors)))
        return ' + '.join(pieces)


def poly_add(p, q):
    """Coefficient-wise sum of two polynomials of the same dimension."""
    return p + q


def poly_mul(p, q):
    """Product of two polynomials of the same dimension."""
    return p * q


def partial_derivative(p, i):
    """Formal partial derivative of <p> along axis <i>."""
    return p.derivative(i)


def as_rng(seed):
    """Accept an int seed or an existing numpy Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_polynomial(dim, max_degree, seed, density=0.6, max_numerator=5, max_denominator=3):
    """Deterministic pseudo-random polynomial of total degree <= <max_degree>.

    Parameters:
        dim (int)            -- ambient dimension
        max_degree (int)     -- bound on the total degree, >= 0
        seed (int or Generator) -- the same int seed always gives the same polynomial
        density (float)      -- probability that a given monomial is present
    """
    if max_degree < 0:
        raise ValueError('max_degree must be non-negative')
    rng = as_rng(seed)
    terms = {}
    for exps in multi_indices(dim, max_degree):
        if rng.random() < density:
            num = int(rng.integers(1, max_numerator + 1)) * (1 if rng.random() < 0.5 else -1)
            den = int(rng.integers(1, max_denominator + 1))
            terms[exps] = Fraction(num, den)
    return Polynomial(dim, terms)
