"""The integral pairing, the cyclic shift C and the Σ symmetrizer.

Identities "under the integral" ∫ D(f_1, ..., f_N) Ω are decided by a normal
form: repeated integration by parts moves every derivative off one chosen
slot. With Ω = e^φ dx a transfer of ∂_i off slot s turns

    c · ∂_i(g_s) · ∏ g_j    into    -(∂_i c + c ∂_i φ) · g_s · ∏ g_j - Σ_j c · g_s · ∂_i g_j ⋯

so all coefficients stay polynomial.
"""
import logging
from fractions import Fraction

from .dpoly import (PolyDiffOp, _Accumulator, cup, d_K, hochschild_d, identity_op)
from .errors import ArityError, DimensionMismatchError
from .polynomial import zero_index

logger = logging.getLogger(__name__)


class DensityNormalForm:
    """Canonical representative of ∫ D(f_1, ..., f_N) Ω modulo total derivatives.

    terms has the PolyDiffOp layout with the reduced slot carrying no derivatives.
    """

    __slots__ = ('dim', 'n_slots', 'vol', 'slot', 'terms')

    def __init__(self, dim, n_slots, vol, terms, slot=0):
        self.dim = dim
        self.n_slots = n_slots
        self.vol = vol
        self.slot = slot
        self.terms = terms

    def as_operator(self):
        return PolyDiffOp._raw(self.dim, self.n_slots, self.terms)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        return _wrap(self.as_operator() + other.as_operator(), self.vol, self.slot)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        self._check(other)
        return _wrap(self.as_operator() - other.as_operator(), self.vol, self.slot)

    def scale(self, factor):
        return _wrap(self.as_operator().scale(factor), self.vol, self.slot)

    def _check(self, other):
        if (self.n_slots, self.slot) != (other.n_slots, other.slot) or self.vol != other.vol:
            raise ValueError('normal forms of different shape or volume form')

    def __eq__(self, other):
        if not isinstance(other, DensityNormalForm):
            return NotImplemented
        return (self.n_slots, self.slot, self.vol, self.terms) == \
            (other.n_slots, other.slot, other.vol, other.terms)

    def __repr__(self):
        return 'DensityNormalForm(slot=%d, %r)' % (self.slot, self.as_operator())


def _wrap(op, vol, slot):
    return DensityNormalForm(op.dim, op.arity, vol, op.terms, slot)


def _check_vol(op, vol):
    if op.dim != vol.dim:
        raise DimensionMismatchError('dimension mismatch: %d vs %d' % (op.dim, vol.dim))


def reduce_density(op, vol, slot=0):
    """Normal form of ∫ op(f_1..f_N) Ω with all derivatives moved off <slot>."""
    _check_vol(op, vol)
    if not 0 <= slot < op.arity:
        raise ArityError('slot %d out of range for arity %d' % (slot, op.arity))
    grad = vol.gradient()
    current = op
    while True:
        top = max((sum(slots[slot]) for slots in current.terms), default=0)
        if top == 0:
            return _wrap(current, vol, slot)
        acc = _Accumulator(op.dim)
        for slots, coeff in current.terms.items():
            alpha = slots[slot]
            if sum(alpha) < top:
                acc.add(slots, coeff)
                continue
            i = next(axis for axis, a in enumerate(alpha) if a)
            lowered = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
            base = slots[:slot] + (lowered,) + slots[slot + 1:]
            acc.add(base, coeff.derivative(i) + coeff * grad[i], -1)
            for j, beta in enumerate(slots):
                if j == slot:
                    continue
                raised = beta[:i] + (beta[i] + 1,) + beta[i + 1:]
                acc.add(base[:j] + (raised,) + base[j + 1:], coeff, -1)
        current = acc.build(op.arity)


def integral_normal_form(op, vol):
    """Normal form of ∫ op(f_1, ..., f_N) Ω, clearing the first slot."""
    return reduce_density(op, vol, 0)


def density_normal_form(op, vol):
    """Normal form of ∫ op(f_1, ..., f_n) · f_{n+1} Ω."""
    _check_vol(op, vol)
    return reduce_density(cup(op, identity_op(op.dim)), vol, 0)


def cyclic_shift(op, vol):
    """The operator Cψ with ∫ψ(f_1..f_n) f_{n+1} Ω = (-1)^n ∫Cψ(f_2..f_{n+1}) f_1 Ω."""
    nf = density_normal_form(op, vol)
    acc = _Accumulator(op.dim)
    sign = -1 if op.arity % 2 else 1
    for slots, coeff in nf.terms.items():
        acc.add(slots[1:], coeff, sign)
    return acc.build(op.arity)


def cyclic_power(op, vol, power):
    out = op
    for _ in range(power):
        out = cyclic_shift(out, vol)
    return out


def sigma(op, vol):
    """Σψ = ψ + Cψ + ... + C^{n}ψ for an arity-n operator."""
    acc = _Accumulator(op.dim)
    current = op
    for _ in range(op.arity + 1):
        acc.add_op(current)
        current = cyclic_shift(current, vol)
    return acc.build(op.arity)


def sigma_projector(op, vol):
    """[Σ]ψ = Σψ / (n + 1)."""
    return sigma(op, vol).scale(Fraction(1, op.arity + 1))


def is_cyclic(op, vol):
    return cyclic_shift(op, vol) == op


def bicomplex_square_check(op, vol):
    """Commutation of the two squares relating d_Hoch, d_K, 1 - C and Σ."""
    one_minus_c = op - cyclic_shift(op, vol)
    d_op = hochschild_d(op)
    star1 = (d_op - cyclic_shift(d_op, vol)) == d_K(one_minus_c)
    star2 = hochschild_d(sigma(op, vol)) == sigma(d_K(op), vol)
    return {'star1_ok': star1, 'star2_ok': star2}


def rotate_slots(op, shift):
    """Relabel arguments so that old slot r becomes slot (r + shift) mod N."""
    n = op.arity
    if n == 0:
        return op
    acc = _Accumulator(op.dim)
    for slots, coeff in op.terms.items():
        new = [None] * n
        for r, alpha in enumerate(slots):
            new[(r + shift) % n] = alpha
        acc.add(tuple(new), coeff)
    return acc.build(n)


def specialize_unit(op, slot):
    """Substitute the constant function 1 into <slot>."""
    if not 0 <= slot < op.arity:
        raise ArityError('slot %d out of range for arity %d' % (slot, op.arity))
    zero = zero_index(op.dim)
    acc = _Accumulator(op.dim)
    for slots, coeff in op.terms.items():
        if slots[slot] == zero:
            acc.add(slots[:slot] + slots[slot + 1:], coeff)
    return acc.build(op.arity - 1)


def sigma_defect(op, vol=None):
    """The operator φ measuring d_Hoch Σψ - Σ d_Hoch ψ under the pairing.

    φ = Σ_{j=0}^{k+1} (-1)^{(k-1)j} R^j (ψ(f_1..f_k)·f_{k+1}·f_{k+2}), where R
    rotates the arguments cyclically. The volume form is not needed to build
    φ; it only enters through <sigma_defect_relation>.
    """
    k = op.arity
    if k < 1:
        raise ArityError('the Σ-defect needs arity >= 1')
    one = identity_op(op.dim)
    base = cup(cup(op, one), one)
    acc = _Accumulator(op.dim)
    for j in range(k + 2):
        acc.add_op(rotate_slots(base, j), -1 if ((k - 1) * j) % 2 else 1)
    return acc.build(k + 2)


def proportionality(a, b):
    """The rational λ with a = λ·b for normal forms or operators.

    Returns 0 when both vanish and None when no such λ exists, in
    particular when exactly one side vanishes.
    """
    if a.is_zero() and b.is_zero():
        return Fraction(0)
    if a.is_zero() or b.is_zero() or set(a.terms) != set(b.terms):
        return None
    slots = min(a.terms)
    pa, pb = a.terms[slots], b.terms[slots]
    exps = min(pb.terms)
    ratio = pa.terms.get(exps, Fraction(0)) / pb.terms[exps]
    for key in a.terms:
        if a.terms[key] != b.terms[key].scale(ratio):
            return None
    return ratio


def sigma_defect_relation(op, vol):
    """λ with ∫(d_Hoch Σψ - Σ d_Hoch ψ)·f Ω = λ ∫φ Ω; -1 for every arity."""
    lhs = density_normal_form(hochschild_d(sigma(op, vol)) - sigma(hochschild_d(op), vol), vol)
    rhs = integral_normal_form(sigma_defect(op), vol)
    ratio = proportionality(lhs, rhs)
    logger.debug('sigma defect ratio at arity %d: %s', op.arity, ratio)
    return ratio
