"""Star products f*g = fg + Σ ħ^n B_n(f, g), their residuals and gauge transforms.

ħ is a bookkeeping grade: corrections are lists indexed by the power of ħ,
B_1 first. Corrections are StochasticOps so Monte Carlo built terms keep their
error bars; exact products simply have no stochastic parts.
"""
import itertools
import logging
from fractions import Fraction
from math import factorial

from algebra.cyclic import integral_normal_form
from algebra.dpoly import PolyDiffOp, _Accumulator, cup, identity_op, insert, mult_op
from algebra.errors import (ArityError, DegreeError, DimensionMismatchError, FormalityError,
                            NotPoissonError, UnsupportedOrderError)
from algebra.hkr_cyclic import cyclic_hkr_term
from algebra.polynomial import Polynomial, zero_index
from algebra.tpoly import UPolyElement, check_poisson
from formality.stochastic import StochasticOp
from formality.taylor import cyclic_component

logger = logging.getLogger(__name__)


def _stochastic(op):
    return op if isinstance(op, StochasticOp) else StochasticOp(op)


def bilinear(fn, x, y):
    """fn(x, y) for a bilinear fn when at most one factor carries Monte Carlo weights."""
    x, y = _stochastic(x), _stochastic(y)
    if not x.is_exact() and not y.is_exact():
        raise FormalityError('product of two Monte Carlo estimated operators')
    if not x.is_exact():
        return x.map(lambda op: fn(op, y.exact))
    return y.map(lambda op: fn(x.exact, op))


class StarProduct:

    def __init__(self, dim, corrections):
        """
        Parameters:
            dim (int)          -- ambient dimension
            corrections (list) -- B_1, ..., B_N as arity-2 PolyDiffOp or StochasticOp
        """
        self.dim = dim
        self.corrections = [_stochastic(op) for op in corrections]
        for op in self.corrections:
            if op.arity != 2:
                raise ArityError('star product corrections are bidifferential, got arity %d' % op.arity)
            if op.dim != dim:
                raise DimensionMismatchError('correction of dimension %d in dimension %d' % (op.dim, dim))

    @property
    def order(self):
        return len(self.corrections)

    def term(self, n):
        """B_n with B_0 = m and B_n = 0 beyond the order."""
        if n == 0:
            return StochasticOp(mult_op(self.dim))
        if n > self.order:
            return StochasticOp(PolyDiffOp.zero(self.dim, 2))
        return self.corrections[n - 1]


class GaugeTransform:
    """T = 1 + ħT_1 + ħ²T_2 + ..."""

    def __init__(self, dim, corrections):
        self.dim = dim
        self.corrections = list(corrections)
        for op in self.corrections:
            if op.arity != 1:
                raise ArityError('gauge transform corrections have arity 1, got %d' % op.arity)
            if op.dim != dim:
                raise DimensionMismatchError('correction of dimension %d in dimension %d' % (op.dim, dim))

    @property
    def order(self):
        return len(self.corrections)

    def term(self, n):
        if n == 0:
            return identity_op(self.dim)
        if n > self.order:
            return PolyDiffOp.zero(self.dim, 1)
        return self.corrections[n - 1]

    def inverse(self, order=None):
        """T^{-1} order by order: S_0 = 1, S_n = -Σ_{a=1}^{n} T_a ∘ S_{n-a}.

        The inverse of a truncated T does not truncate, so <order> may exceed
        self.order; it defaults to self.order.
        """
        order = self.order if order is None else order
        inv = [identity_op(self.dim)]
        for n in range(1, order + 1):
            acc = _Accumulator(self.dim)
            for a in range(1, n + 1):
                acc.add_op(insert(self.term(a), 0, inv[n - a]), -1)
            inv.append(acc.build(1))
        return GaugeTransform(self.dim, inv[1:])


def mc_series(gamma, vol, order=2, samples=200000, seed=0, workers=1):
    """B_1 = C_1(γ) exactly, B_2 = C_2(γ, γ)/2 from Monte Carlo weights."""
    if order > 2:
        raise UnsupportedOrderError('star products are built up to order 2')
    report = check_poisson(gamma, vol)
    if not report.ok:
        raise NotPoissonError('not a divergence-free Poisson bivector: [γ,γ]=0 is %s, div γ = %r'
                              % (report.jacobi_ok, report.div))
    corrections = []
    if order >= 1:
        corrections.append(cyclic_hkr_term(gamma, 0, vol))
    if order >= 2:
        eta = UPolyElement.single(gamma)
        corrections.append(cyclic_component(2, [eta, eta], 2, vol, samples, seed, workers)
                           .scale(Fraction(1, 2)))
    return StarProduct(gamma.dim, corrections)


def associativity_residual(s, order=None):
    """[ħ^0, ..., ħ^order] coefficients of (f*g)*h - f*(g*h)."""
    order = s.order if order is None else order
    if order > s.order:
        raise UnsupportedOrderError('residual order %d exceeds the product order %d' % (order, s.order))
    out = []
    for n in range(order + 1):
        total = StochasticOp(PolyDiffOp.zero(s.dim, 3))
        for a in range(n + 1):
            left = bilinear(lambda x, y: insert(x, 0, y), s.term(a), s.term(n - a))
            right = bilinear(lambda x, y: insert(x, 1, y), s.term(a), s.term(n - a))
            total = total + left - right
        out.append(total)
    return out


def _normal_form_op(op, vol):
    return integral_normal_form(op, vol).as_operator()


def cyclicity_residual(s, vol):
    """Per order, the normal form of ∫(f*g)·h Ω - ∫f·(g*h) Ω."""
    one = identity_op(s.dim)
    out = []
    for n in range(s.order + 1):
        term = s.term(n)
        out.append(term.map(lambda op: _normal_form_op(cup(op, one) - cup(one, op), vol)))
    return out


def trace_residual(s, vol):
    """Per order, the normal form of ∫ f*g Ω - ∫ f·g Ω."""
    out = [StochasticOp(PolyDiffOp.zero(s.dim, 2))]
    for n in range(1, s.order + 1):
        out.append(s.term(n).map(lambda op: _normal_form_op(op, vol)))
    return out


def moyal_order(gamma, n):
    """(1/n!)(1/2)^n Σ γ^{i_1 j_1}⋯γ^{i_n j_n} ∂_{i_1..i_n} f ∂_{j_1..j_n} g."""
    if gamma.degree != 2:
        raise DegreeError('the Moyal series needs a bivector')
    if not gamma.is_constant():
        raise DegreeError('the Moyal series needs constant coefficients')
    dim = gamma.dim
    if n == 0:
        return mult_op(dim)
    pairs = []
    for i in range(dim):
        for j in range(dim):
            value = gamma.component((i, j)).constant_term()
            if value:
                pairs.append((i, j, value))
    acc = _Accumulator(dim)
    for choice in itertools.product(pairs, repeat=n):
        coeff = Fraction(1)
        alpha, beta = [0] * dim, [0] * dim
        for i, j, value in choice:
            coeff *= value
            alpha[i] += 1
            beta[j] += 1
        acc.add((tuple(alpha), tuple(beta)), Polynomial.constant(dim, 1), coeff)
    return acc.build(2).scale(Fraction(1, factorial(n) * 2 ** n))


def moyal_product(gamma, order):
    return StarProduct(gamma.dim, [moyal_order(gamma, n) for n in range(1, order + 1)])


def gauge_transform(s, t):
    """f*'g = T(T^{-1}f * T^{-1}g) through order max(s.order, t.order).

    B_n and T_n count as zero beyond the orders of <s> and <t>.
    """
    if s.dim != t.dim:
        raise DimensionMismatchError('dimension mismatch: %d vs %d' % (s.dim, t.dim))
    order = max(s.order, t.order)
    inv = t.inverse(order)
    out = []
    for n in range(1, order + 1):
        total = StochasticOp(PolyDiffOp.zero(s.dim, 2))
        for a, b, c in itertools.product(range(n + 1), repeat=3):
            e = n - a - b - c
            if e < 0:
                continue
            sc, se, ta = inv.term(c), inv.term(e), t.term(a)
            total = total + s.term(b).map(
                lambda op: insert(ta, 0, insert(insert(op, 0, sc), 1, se)))
        out.append(total)
    return StarProduct(s.dim, out)


def is_adjoint(t, vol):
    """∫T(f)·g Ω = ∫f·T^{-1}(g) Ω order by order."""
    one = identity_op(t.dim)
    inv = t.inverse()
    for n in range(1, t.order + 1):
        left = integral_normal_form(cup(t.term(n), one), vol)
        right = integral_normal_form(cup(one, inv.term(n)), vol)
        if left != right:
            return False
    return True


def is_unital(op):
    """B(f, 1) = B(1, f) = 0."""
    zero = zero_index(op.dim)
    return all(slots[0] != zero and slots[1] != zero for slots in op.terms)
