"""Polydifferential operators and the Hochschild machinery.

A PolyDiffOp of arity n is the operator

    (f_1, ..., f_n) -> Σ coeff · ∏_j ∂^{slots[j]} f_j

stored as a dict from the tuple of n slot multi-indices to the Polynomial
coefficient. Arity 0 is a plain function, stored under the empty tuple.

Every composition in this module is built from a single primitive, <insert>,
which plugs one operator into one slot of another and distributes the slot's
derivative over the product (coefficient x inner slots) by the Leibniz rule.
"""
import itertools
import logging
from fractions import Fraction
from math import factorial

from .errors import ArityError, DegreeError, DimensionMismatchError
from .polynomial import (Polynomial, add_indices, as_rng, leibniz_splits, multi_indices,
                         random_polynomial, zero_index)
from .tpoly import permutation_sign, schouten_bracket

logger = logging.getLogger(__name__)


class _Accumulator:
    """Mutable monomial-level sum used while building an operator."""

    def __init__(self, dim):
        self.dim = dim
        self.data = {}

    def add(self, slots, poly, factor=1):
        if not factor:
            return
        bucket = self.data.setdefault(slots, {})
        for exps, coeff in poly.terms.items():
            value = bucket.get(exps, 0) + coeff * factor
            if value:
                bucket[exps] = value
            else:
                bucket.pop(exps, None)

    def add_op(self, op, factor=1):
        for slots, poly in op.terms.items():
            self.add(slots, poly, factor)

    def build(self, arity):
        terms = {slots: Polynomial._raw(self.dim, bucket)
                 for slots, bucket in self.data.items() if bucket}
        return PolyDiffOp._raw(self.dim, arity, terms)


class PolyDiffOp:
    """A multilinear polydifferential operator with polynomial coefficients."""

    __slots__ = ('dim', 'arity', 'terms')

    def __init__(self, dim, arity, terms=None):
        """Build a normalized operator.

        Parameters:
            dim (int)    -- ambient dimension d
            arity (int)  -- number of arguments n
            terms (dict) -- map from a tuple of n multi-indices to a Polynomial
        """
        if arity < 0:
            raise ArityError('negative arity')
        self.dim = dim
        self.arity = arity
        acc = _Accumulator(dim)
        for slots, poly in (terms or {}).items():
            slots = tuple(tuple(alpha) for alpha in slots)
            if len(slots) != arity:
                raise ArityError('term with %d slots in an arity %d operator' % (len(slots), arity))
            if any(len(alpha) != dim for alpha in slots) or poly.dim != dim:
                raise DimensionMismatchError('term does not live in dimension %d' % dim)
            acc.add(slots, poly)
        self.terms = acc.build(arity).terms

    @classmethod
    def _raw(cls, dim, arity, terms):
        op = cls.__new__(cls)
        op.dim = dim
        op.arity = arity
        op.terms = terms
        return op

    @classmethod
    def zero(cls, dim, arity):
        return cls._raw(dim, arity, {})

    @property
    def grading(self):
        return self.arity - 1

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.dim != other.dim:
            raise DimensionMismatchError('dimension mismatch: %d vs %d' % (self.dim, other.dim))

    def __add__(self, other):
        self._check(other)
        if self.arity != other.arity:
            raise ArityError('cannot add operators of arity %d and %d' % (self.arity, other.arity))
        acc = _Accumulator(self.dim)
        acc.add_op(self)
        acc.add_op(other)
        return acc.build(self.arity)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        self._check(other)
        if self.arity != other.arity:
            raise ArityError('cannot subtract operators of arity %d and %d' % (self.arity, other.arity))
        acc = _Accumulator(self.dim)
        acc.add_op(self)
        acc.add_op(other, -1)
        return acc.build(self.arity)

    def scale(self, factor):
        factor = Fraction(factor)
        if not factor:
            return PolyDiffOp.zero(self.dim, self.arity)
        return PolyDiffOp._raw(self.dim, self.arity,
                               {slots: poly.scale(factor) for slots, poly in self.terms.items()})

    def times(self, poly):
        """Multiply every coefficient by a function."""
        acc = _Accumulator(self.dim)
        for slots, coeff in self.terms.items():
            acc.add(slots, coeff * poly)
        return acc.build(self.arity)

    def max_slot_order(self):
        return max((sum(alpha) for slots in self.terms for alpha in slots), default=0)

    def max_total_order(self):
        return max((sum(map(sum, slots)) for slots in self.terms), default=0)

    def max_coeff_degree(self):
        return max((p.total_degree() for p in self.terms.values()), default=-1)

    def function_value(self):
        if self.arity:
            raise ArityError('operator of arity %d is not a function' % self.arity)
        return self.terms.get((), Polynomial.zero(self.dim))

    def __eq__(self, other):
        if not isinstance(other, PolyDiffOp):
            return NotImplemented
        return (self.dim, self.arity, self.terms) == (other.dim, other.arity, other.terms)

    def __hash__(self):
        return hash((self.dim, self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return 'PolyDiffOp(dim=%d, arity=%d, 0)' % (self.dim, self.arity)
        parts = []
        for slots, coeff in sorted(self.terms.items()):
            factors = []
            for j, alpha in enumerate(slots):
                d = ''.join('d%d' % i * a for i, a in enumerate(alpha))
                factors.append('%sf%d' % (d, j + 1))
            parts.append('(%r)%s' % (coeff, ''.join('[%s]' % f for f in factors)))
        return 'PolyDiffOp(dim=%d, arity=%d, %s)' % (self.dim, self.arity, ' + '.join(parts))


def apply(op, args):
    """Evaluate <op> on a list of polynomials."""
    if len(args) != op.arity:
        raise ArityError('operator of arity %d applied to %d arguments' % (op.arity, len(args)))
    for arg in args:
        if arg.dim != op.dim:
            raise DimensionMismatchError('argument of dimension %d for a dimension %d operator'
                                         % (arg.dim, op.dim))
    total = Polynomial.zero(op.dim)
    cache = {}
    for slots, coeff in op.terms.items():
        value = coeff
        for j, alpha in enumerate(slots):
            key = (j, alpha)
            if key not in cache:
                cache[key] = args[j].derive(alpha)
            value = value * cache[key]
            if value.is_zero():
                break
        total = total + value
    return total


def mult_op(dim):
    """The multiplication m(a, b) = a·b."""
    zero = zero_index(dim)
    return PolyDiffOp(dim, 2, {(zero, zero): Polynomial.constant(dim, 1)})


def identity_op(dim):
    zero = zero_index(dim)
    return PolyDiffOp(dim, 1, {(zero,): Polynomial.constant(dim, 1)})


def function_op(poly):
    """The arity-0 operator carrying <poly>."""
    return PolyDiffOp(poly.dim, 0, {(): poly})


def product_op(dim, arity, coeff=None):
    """(f_1, ..., f_n) -> coeff · f_1 ⋯ f_n."""
    coeff = coeff if coeff is not None else Polynomial.constant(dim, 1)
    return PolyDiffOp(dim, arity, {(zero_index(dim),) * arity: coeff})


def insert(outer, i, inner):
    """outer(a_0, ..., inner(b_0, ...), ..., a_{n-1}) with <inner> in slot <i>.

    The result has arity outer.arity + inner.arity - 1; the inner arguments
    take the place of slot i.
    """
    outer._check(inner)
    if not 0 <= i < outer.arity:
        raise ArityError('slot %d out of range for arity %d' % (i, outer.arity))
    q = inner.arity
    acc = _Accumulator(outer.dim)
    for oslots, ocoeff in outer.terms.items():
        alpha = oslots[i]
        before, after = oslots[:i], oslots[i + 1:]
        for islots, icoeff in inner.terms.items():
            for mult, betas in leibniz_splits(alpha, q + 1):
                coeff = ocoeff * icoeff.derive(betas[0])
                if coeff.is_zero():
                    continue
                middle = tuple(add_indices(s, b) for s, b in zip(islots, betas[1:]))
                acc.add(before + middle + after, coeff, mult)
    return acc.build(outer.arity + q - 1)


def composition(a, b):
    """Gerstenhaber pre-Lie product a ∘ b = Σ_i (-1)^{i·k_b} insert(a, i, b)."""
    a._check(b)
    kb = b.arity - 1
    acc = _Accumulator(a.dim)
    for i in range(a.arity):
        acc.add_op(insert(a, i, b), -1 if (i * kb) % 2 else 1)
    return acc.build(max(a.arity + b.arity - 1, 0))


def gerstenhaber(a, b):
    """[a, b] = a ∘ b - (-1)^{k_a k_b} b ∘ a with k = arity - 1."""
    a._check(b)
    ka, kb = a.arity - 1, b.arity - 1
    arity = a.arity + b.arity - 1
    if arity < 0:
        return PolyDiffOp.zero(a.dim, 0)
    acc = _Accumulator(a.dim)
    acc.add_op(composition(a, b))
    acc.add_op(composition(b, a), 1 if (ka * kb) % 2 else -1)
    return acc.build(arity)


def cup(a, b):
    """(a·b)(f_1..f_{p+q}) = a(f_1..f_p) · b(f_{p+1}..f_{p+q})."""
    a._check(b)
    acc = _Accumulator(a.dim)
    for sa, ca in a.terms.items():
        for sb, cb in b.terms.items():
            acc.add(sa + sb, ca * cb)
    return acc.build(a.arity + b.arity)


def _hochschild_parts(op):
    """The Hochschild expression a_1ψ(..) + Σ(-1)^{i+1}ψ(.., a_i a_{i+1}, ..) without its last term."""
    m = mult_op(op.dim)
    acc = _Accumulator(op.dim)
    if op.arity == 0:
        acc.add_op(cup(identity_op(op.dim), op))
        return acc.build(1)
    acc.add_op(insert(m, 1, op))
    for i in range(op.arity):
        acc.add_op(insert(op, i, m), -1 if i % 2 == 0 else 1)
    return acc.build(op.arity + 1)


def hochschild_d(op):
    """d_Hoch(ψ) = [m, ψ].

    This is the classical alternating expression multiplied by (-1)^{n-1},
    n = arity; the same twist is applied to <d_K>.
    """
    n = op.arity
    eps = 1 if (n - 1) % 2 == 0 else -1
    last = cup(op, identity_op(op.dim))
    out = _hochschild_parts(op) + (last if (n + 1) % 2 == 0 else -last)
    return out.scale(eps)


def d_K(op):
    """The Hochschild differential without the ψ(a_1..a_n)·a_{n+1} term."""
    return hochschild_d(op) - cup(op, identity_op(op.dim))


def homotopy_h(op):
    """h(ψ)(a_1..a_{n-1}) = ψ(a_1, .., a_{n-1}, 1)."""
    if op.arity == 0:
        raise ArityError('the homotopy is undefined on arity 0')
    zero = zero_index(op.dim)
    acc = _Accumulator(op.dim)
    for slots, coeff in op.terms.items():
        if slots[-1] == zero:
            acc.add(slots[:-1], coeff)
    return acc.build(op.arity - 1)


def homotopy_identity(op):
    """d_K h ψ + h d_K ψ + ψ, which vanishes for every ψ."""
    out = homotopy_h(d_K(op)) + op
    if op.arity:
        out = out + d_K(homotopy_h(op))
    return out


def alternating_operator(gamma, arity, positions):
    """Unnormalized Alt of <gamma> placed on the given slots.

    For every component P_I and permutation σ, slot positions[r] receives
    ∂_{I[σ(r)]} with sign sgn σ; the remaining slots carry no derivative.
    A function gamma gives coeff · f_1 ⋯ f_arity.
    """
    if len(positions) != gamma.degree:
        raise DegreeError('%d positions for a polyvector of degree %d' % (len(positions), gamma.degree))
    if len(set(positions)) != len(positions) or any(not 0 <= p < arity for p in positions):
        raise ArityError('invalid positions %s for arity %d' % (positions, arity))
    dim = gamma.dim
    zero = zero_index(dim)
    acc = _Accumulator(dim)
    perms = [(perm, permutation_sign(perm)) for perm in itertools.permutations(range(gamma.degree))]
    for indices, coeff in gamma.components.items():
        for perm, sign in perms:
            slots = [zero] * arity
            for r, pos in enumerate(positions):
                alpha = [0] * dim
                alpha[indices[perm[r]]] = 1
                slots[pos] = tuple(alpha)
            acc.add(tuple(slots), coeff, sign)
    return acc.build(arity)


def hkr(gamma):
    """φ_HKR(γ) = 1/k! Alt ξ_1(f_1)⋯ξ_k(f_k)."""
    k = gamma.degree
    return alternating_operator(gamma, k, list(range(k))).scale(Fraction(1, factorial(k)))


def vector_field_op(field):
    """The arity-1 operator f -> ξ(f)."""
    if field.degree != 1:
        raise DegreeError('expected a vector field, got degree %d' % field.degree)
    return hkr(field)


def random_operator(dim, arity, max_order, max_poly_degree, seed, density=0.35):
    """Random arity-n operator with slot orders <= max_order."""
    rng = as_rng(seed)
    indices = multi_indices(dim, max_order)
    terms = {}
    for slots in itertools.product(indices, repeat=arity):
        if rng.random() < density:
            poly = random_polynomial(dim, max_poly_degree, rng, density=0.5)
            if not poly.is_zero():
                terms[slots] = poly
    if not terms:
        # never return an empty sample
        slots = tuple(indices[int(rng.integers(len(indices)))] for _ in range(arity))
        terms[slots] = Polynomial.constant(dim, 1)
    return PolyDiffOp(dim, arity, terms)


def _basis(dim, arity, max_order, max_degree):
    one = Fraction(1)
    for slots in itertools.product(multi_indices(dim, max_order), repeat=arity):
        for exps in multi_indices(dim, max_degree):
            yield slots, exps, PolyDiffOp._raw(dim, arity, {slots: Polynomial._raw(dim, {exps: one})})


def is_coboundary(target, max_order=None, max_degree=None):
    """Whether target = hochschild_d(X) for some X in a truncated operator space.

    X ranges over arity n-1 operators with slot orders <= max_order and
    coefficient degree <= max_degree (defaults: the largest total order of a
    target term, and the target degree bound raised by one). Decided by comparing ranks over QQ.
    """
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    if target.is_zero():
        return True
    if target.arity == 0:
        return False
    max_order = target.max_total_order() if max_order is None else max_order
    max_degree = target.max_coeff_degree() + 1 if max_degree is None else max_degree
    columns = []
    rows = {}
    for _, _, basis_op in _basis(target.dim, target.arity - 1, max_order, max_degree):
        image = hochschild_d(basis_op)
        column = {}
        for slots, poly in image.terms.items():
            for exps, coeff in poly.terms.items():
                column[rows.setdefault((slots, exps), len(rows))] = coeff
        columns.append(column)
    rhs = {}
    for slots, poly in target.terms.items():
        for exps, coeff in poly.terms.items():
            rhs[rows.setdefault((slots, exps), len(rows))] = coeff
    nrows, ncols = len(rows), len(columns)
    logger.debug('coboundary system: %d equations, %d unknowns', nrows, ncols)
    dense = [[QQ(0)] * (ncols + 1) for _ in range(nrows)]
    for c, column in enumerate(columns):
        for r, value in column.items():
            dense[r][c] = QQ(value.numerator, value.denominator)
    for r, value in rhs.items():
        dense[r][ncols] = QQ(value.numerator, value.denominator)
    augmented = DomainMatrix(dense, (nrows, ncols + 1), QQ)
    if ncols == 0:
        return augmented.rank() == 0
    system = DomainMatrix([row[:ncols] for row in dense], (nrows, ncols), QQ)
    return system.rank() == augmented.rank()


def hkr_bracket_defect(gamma1, gamma2, sign=1):
    """[hkr γ₁, hkr γ₂] - sign·hkr[γ₁, γ₂]."""
    return gerstenhaber(hkr(gamma1), hkr(gamma2)) - hkr(schouten_bracket(gamma1, gamma2)).scale(sign)


def hkr_bracket_sign(gamma1, gamma2, **bounds):
    """The sign σ for which the HKR bracket defect is a coboundary, or None."""
    for sign in (1, -1):
        if is_coboundary(hkr_bracket_defect(gamma1, gamma2, sign), **bounds):
            return sign
    return None
