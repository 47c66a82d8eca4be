"""Polyvector fields, the Schouten bracket, divergence and the dg Lie algebra T_poly ⊗ ℂ[u].

A PolyVector of degree k stores its antisymmetric components on strictly
increasing index tuples. Its grading is k - 1. Brackets are computed by
decomposing every component into a wedge of vector fields (the coefficient is
put on the first factor) and applying the wedge formula factor by factor.
"""
import itertools

from .errors import DegreeError, DimensionMismatchError
from .polynomial import Polynomial, as_rng, random_polynomial


def sort_sign(indices):
    """Return (sign, sorted tuple) for a tuple of indices, sign 0 on repetition."""
    indices = list(indices)
    if len(set(indices)) != len(indices):
        return 0, None
    sign = 1
    for i in range(len(indices)):
        for j in range(i + 1, len(indices)):
            if indices[i] > indices[j]:
                sign = -sign
    return sign, tuple(sorted(indices))


def permutation_sign(perm):
    return sort_sign(perm)[0]


class PolyVector:
    """An antisymmetric k-vector field with polynomial components.

    components maps strictly increasing k-tuples to Polynomial; a function
    (k = 0) is stored under the empty tuple.
    """

    __slots__ = ('dim', 'degree', 'components')

    def __init__(self, dim, degree, components=None):
        self.dim = dim
        self.degree = degree
        clean = {}
        for indices, poly in (components or {}).items():
            indices = tuple(indices)
            if len(indices) != degree:
                raise DegreeError('index tuple %s does not have %d entries' % (indices, degree))
            if any(not 0 <= i < dim for i in indices):
                raise DegreeError('index tuple %s out of range for dimension %d' % (indices, dim))
            if poly.dim != dim:
                raise DimensionMismatchError('component of dimension %d in a dimension %d field'
                                             % (poly.dim, dim))
            sign, key = sort_sign(indices)
            if not sign:
                continue
            value = clean.get(key, Polynomial.zero(dim)) + (poly if sign > 0 else -poly)
            if value.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = value
        self.components = clean

    @property
    def grading(self):
        return self.degree - 1

    @classmethod
    def zero(cls, dim, degree):
        return cls(dim, degree)

    def is_zero(self):
        return not self.components

    def component(self, indices):
        """Skew-tensor component for an arbitrary (unsorted) index tuple."""
        sign, key = sort_sign(indices)
        if not sign or key not in self.components:
            return Polynomial.zero(self.dim)
        poly = self.components[key]
        return poly if sign > 0 else -poly

    def function_value(self):
        """The underlying Polynomial of a degree-0 polyvector."""
        if self.degree != 0:
            raise DegreeError('not a function')
        return self.components.get((), Polynomial.zero(self.dim))

    def _check(self, other):
        if self.dim != other.dim:
            raise DimensionMismatchError('dimension mismatch: %d vs %d' % (self.dim, other.dim))

    def __add__(self, other):
        self._check(other)
        if self.degree != other.degree:
            raise DegreeError('cannot add polyvectors of degree %d and %d' % (self.degree, other.degree))
        comps = dict(self.components)
        for key, poly in other.components.items():
            comps[key] = comps.get(key, Polynomial.zero(self.dim)) + poly
        return PolyVector(self.dim, self.degree, comps)

    def __neg__(self):
        return PolyVector(self.dim, self.degree, {k: -p for k, p in self.components.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return PolyVector(self.dim, self.degree, {k: p.scale(factor) for k, p in self.components.items()})

    def times(self, poly):
        """Multiply every component by a function."""
        return PolyVector(self.dim, self.degree, {k: p * poly for k, p in self.components.items()})

    def is_constant(self):
        return all(p.is_constant() for p in self.components.values())

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return (self.dim, self.degree, self.components) == (other.dim, other.degree, other.components)

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self.components.items())))

    def __repr__(self):
        if not self.components:
            return 'PolyVector(dim=%d, degree=%d, 0)' % (self.dim, self.degree)
        parts = ['(%r)%s' % (p, ''.join('d%d' % i for i in key)) for key, p in sorted(self.components.items())]
        return 'PolyVector(dim=%d, degree=%d, %s)' % (self.dim, self.degree, ' + '.join(parts))


def function(poly):
    """Degree-0 polyvector carrying <poly>."""
    return PolyVector(poly.dim, 0, {(): poly})


def vector_field(coefficients):
    """Vector field Σ coefficients[i] ∂_i."""
    dim = len(coefficients)
    return PolyVector(dim, 1, {(i,): p for i, p in enumerate(coefficients)})


def coordinate_field(dim, indices, coeff=None):
    """The wedge ∂_{i1} ∧ ... ∧ ∂_{ik}, optionally multiplied by a polynomial."""
    coeff = coeff if coeff is not None else Polynomial.constant(dim, 1)
    return PolyVector(dim, len(indices), {tuple(indices): coeff})


def theta(dim, k):
    """The element (∂_1 ∧ ... ∧ ∂_d) ⊗ u^k."""
    return UPolyElement(dim, {(k, dim): coordinate_field(dim, range(dim))})


def vector_components(field):
    """List of the dim coefficient polynomials of a vector field."""
    return [field.component((i,)) for i in range(field.dim)]


def apply_vector_field(field, poly):
    """ξ(f) = Σ ξ^i ∂_i f."""
    out = Polynomial.zero(poly.dim)
    for (i,), coeff in field.components.items():
        out = out + coeff * poly.derivative(i)
    return out


def lie_bracket(a, b):
    """[X, Y]^j = X(Y^j) - Y(X^j) for vector fields X, Y."""
    a._check(b)
    ya = vector_components(a)
    yb = vector_components(b)
    return vector_field([apply_vector_field(a, yb[j]) - apply_vector_field(b, ya[j])
                         for j in range(a.dim)])


def wedge(a, b):
    """Exterior product of polyvectors; degrees add."""
    a._check(b)
    comps = {}
    for ia, pa in a.components.items():
        for ib, pb in b.components.items():
            sign, key = sort_sign(ia + ib)
            if not sign:
                continue
            term = pa * pb
            comps[key] = comps.get(key, Polynomial.zero(a.dim)) + (term if sign > 0 else -term)
    return PolyVector(a.dim, a.degree + b.degree, comps)


def wedge_all(fields, dim):
    out = function(Polynomial.constant(dim, 1))
    for field in fields:
        out = wedge(out, field)
    return out


def _decompose(pv):
    """Write <pv> as a sum of wedges of vector fields (coefficient on the first factor)."""
    out = []
    for indices, poly in pv.components.items():
        factors = [coordinate_field(pv.dim, (indices[0],), poly)]
        factors += [coordinate_field(pv.dim, (i,)) for i in indices[1:]]
        out.append(factors)
    return out


def _bracket_with_function(pv, poly):
    """[P, f] = Σ_r (-1)^r X_r(f) · X_0 ∧ .. X̂_r .. ∧ X_{k-1}."""
    out = PolyVector.zero(pv.dim, pv.degree - 1)
    for factors in _decompose(pv):
        for r, field in enumerate(factors):
            rest = wedge_all(factors[:r] + factors[r + 1:], pv.dim)
            term = rest.times(apply_vector_field(field, poly))
            out = out + (term if r % 2 == 0 else -term)
    return out


def schouten_bracket(a, b):
    """Schouten-Nijenhuis bracket; the result has degree a.degree + b.degree - 1.

    Two functions bracket to the zero function.
    """
    a._check(b)
    if a.degree == 0 and b.degree == 0:
        return PolyVector.zero(a.dim, 0)
    if b.degree == 0:
        return _bracket_with_function(a, b.function_value())
    if a.degree == 0:
        out = _bracket_with_function(b, a.function_value())
        return out if b.degree % 2 == 0 else -out
    out = PolyVector.zero(a.dim, a.degree + b.degree - 1)
    for xs in _decompose(a):
        for ys in _decompose(b):
            for i, x in enumerate(xs):
                for j, y in enumerate(ys):
                    term = wedge_all([lie_bracket(x, y)] + xs[:i] + xs[i + 1:] + ys[:j] + ys[j + 1:], a.dim)
                    out = out + (term if (i + j) % 2 == 0 else -term)
    return out


class VolumeForm:
    """Ω = exp(log_density) dx_1 ∧ ... ∧ dx_d."""

    __slots__ = ('dim', 'log_density', '_grad')

    def __init__(self, dim, log_density=None):
        log_density = log_density if log_density is not None else Polynomial.zero(dim)
        if log_density.dim != dim:
            raise DimensionMismatchError('log-density of dimension %d for a dimension %d volume form'
                                         % (log_density.dim, dim))
        self.dim = dim
        self.log_density = log_density
        self._grad = None

    @classmethod
    def standard(cls, dim):
        return cls(dim)

    def is_standard(self):
        return self.log_density.is_zero()

    def gradient(self):
        """The polynomials ∂_i φ of the log-density."""
        if self._grad is None:
            self._grad = tuple(self.log_density.derivative(i) for i in range(self.dim))
        return self._grad

    def twisted_derivative(self, poly, i):
        """e^{-φ} ∂_i (e^{φ} g) = ∂_i g + (∂_i φ) g."""
        return poly.derivative(i) + self.gradient()[i] * poly

    def __eq__(self, other):
        if not isinstance(other, VolumeForm):
            return NotImplemented
        return self.dim == other.dim and self.log_density == other.log_density

    def __hash__(self):
        return hash((self.dim, self.log_density))

    def __repr__(self):
        return 'VolumeForm(dim=%d, log_density=%r)' % (self.dim, self.log_density)


def divergence(a, vol):
    """div_Ω(P)^J = Σ_i (∂_i + ∂_i φ) P^{J i}; the divergence of a function is 0."""
    if a.dim != vol.dim:
        raise DimensionMismatchError('dimension mismatch: %d vs %d' % (a.dim, vol.dim))
    if a.degree == 0:
        return PolyVector.zero(a.dim, 0)
    comps = {}
    for rest in itertools.combinations(range(a.dim), a.degree - 1):
        total = Polynomial.zero(a.dim)
        for i in range(a.dim):
            if i in rest:
                continue
            total = total + vol.twisted_derivative(a.component(rest + (i,)), i)
        if not total.is_zero():
            comps[rest] = total
    return PolyVector(a.dim, a.degree - 1, comps)


class PoissonReport:
    """Outcome of check_poisson."""

    def __init__(self, jacobi_ok, div_free, bracket=None, div=None):
        self.jacobi_ok = jacobi_ok
        self.div_free = div_free
        self.bracket = bracket
        self.div = div

    @property
    def ok(self):
        return self.jacobi_ok and self.div_free

    def as_dict(self):
        return {'jacobi_ok': self.jacobi_ok, 'div_free': self.div_free}


def check_poisson(gamma, vol):
    """Test [γ, γ] = 0 and div_Ω γ = 0 for a bivector γ."""
    if gamma.degree != 2:
        raise DegreeError('check_poisson expects a bivector, got degree %d' % gamma.degree)
    bracket = schouten_bracket(gamma, gamma)
    div = divergence(gamma, vol)
    return PoissonReport(bracket.is_zero(), div.is_zero(), bracket, div)


class UPolyElement:
    """A finite sum Σ γ ⊗ u^k in T_poly ⊗ ℂ[u].

    Terms are keyed by (u power, wedge degree) so that non-homogeneous sums
    produced by brackets stay representable. The total grading of a term is
    (degree - 1) + 2k.
    """

    __slots__ = ('dim', 'terms')

    def __init__(self, dim, terms=None):
        self.dim = dim
        clean = {}
        for (k, degree), pv in (terms or {}).items():
            if k < 0:
                raise ValueError('negative u power')
            if pv.dim != dim:
                raise DimensionMismatchError('term of dimension %d in a dimension %d element' % (pv.dim, dim))
            if pv.degree != degree:
                raise DegreeError('term keyed with degree %d has degree %d' % (degree, pv.degree))
            if pv.is_zero():
                continue
            key = (k, degree)
            value = clean[key] + pv if key in clean else pv
            if value.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = value
        self.terms = clean

    @classmethod
    def from_terms(cls, dim, pairs):
        """Build from an iterable of (u power, PolyVector)."""
        out = cls(dim)
        for k, pv in pairs:
            out = out + cls(dim, {(k, pv.degree): pv})
        return out

    @classmethod
    def single(cls, pv, k=0):
        return cls(pv.dim, {(k, pv.degree): pv})

    def items(self):
        """(u power, PolyVector) pairs in key order."""
        return [(k, self.terms[(k, deg)]) for k, deg in sorted(self.terms)]

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        return len({(deg - 1) + 2 * k for k, deg in self.terms}) <= 1

    def grading(self):
        """Total grading of a homogeneous element."""
        gradings = {(deg - 1) + 2 * k for k, deg in self.terms}
        if len(gradings) != 1:
            raise DegreeError('element is not homogeneous')
        return gradings.pop()

    def __add__(self, other):
        if self.dim != other.dim:
            raise DimensionMismatchError('dimension mismatch: %d vs %d' % (self.dim, other.dim))
        terms = dict(self.terms)
        for key, pv in other.terms.items():
            terms[key] = terms[key] + pv if key in terms else pv
        return UPolyElement(self.dim, terms)

    def __neg__(self):
        return UPolyElement(self.dim, {key: -pv for key, pv in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return UPolyElement(self.dim, {key: pv.scale(factor) for key, pv in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, UPolyElement):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __repr__(self):
        return 'UPolyElement(%s)' % ', '.join('%r u^%d' % (pv, k) for k, pv in self.items())


def d_div(e, vol):
    """d_div(γ ⊗ u^k) = div(γ) ⊗ u^{k+1}."""
    if e.dim != vol.dim:
        raise DimensionMismatchError('dimension mismatch: %d vs %d' % (e.dim, vol.dim))
    return UPolyElement.from_terms(e.dim, [(k + 1, divergence(pv, vol))
                                           for k, pv in e.items() if pv.degree > 0])


def u_bracket(e1, e2):
    """[γ₁ ⊗ u^{k₁}, γ₂ ⊗ u^{k₂}] = [γ₁, γ₂] ⊗ u^{k₁+k₂}, extended bilinearly."""
    if e1.dim != e2.dim:
        raise DimensionMismatchError('dimension mismatch: %d vs %d' % (e1.dim, e2.dim))
    pairs = []
    for k1, g1 in e1.items():
        for k2, g2 in e2.items():
            if g1.degree == 0 and g2.degree == 0:
                continue
            pairs.append((k1 + k2, schouten_bracket(g1, g2)))
    return UPolyElement.from_terms(e1.dim, pairs)


def divergence_wedge_signs(deg_a, deg_b):
    """Signs (s_a, s_b, eps) with [a, b] = eps·(div(a∧b) + s_a·div(a)∧b + s_b·a∧div(b)).

    Under the Schouten and divergence conventions above these depend only on
    deg b: eps = (-1)^{deg b}, s_a = -(-1)^{deg b}, s_b = -1.
    """
    if deg_a < 0 or deg_b < 0:
        raise DegreeError('negative degrees (%d, %d)' % (deg_a, deg_b))
    eps = -1 if deg_b % 2 else 1
    return -eps, -1, eps


def divergence_wedge_residual(a, b, vol):
    """[a, b] minus the right-hand side of the divergence-of-wedge identity; always zero."""
    a._check(b)
    s_a, s_b, eps = divergence_wedge_signs(a.degree, b.degree)
    if a.degree + b.degree == 0:
        return PolyVector.zero(a.dim, 0)
    rhs = divergence(wedge(a, b), vol)
    if a.degree:
        rhs = rhs + wedge(divergence(a, vol), b).scale(s_a)
    if b.degree:
        rhs = rhs + wedge(a, divergence(b, vol)).scale(s_b)
    return schouten_bracket(a, b) - rhs.scale(eps)


def random_polyvector(dim, degree, max_poly_degree, seed, density=0.6):
    """Random polyvector of the given degree with random polynomial components."""
    rng = as_rng(seed)
    comps = {}
    for indices in itertools.combinations(range(dim), degree):
        comps[indices] = random_polynomial(dim, max_poly_degree, rng, density=density)
    return PolyVector(dim, degree, comps)


def random_u_element(dim, max_degree, max_u, max_poly_degree, seed):
    """Random sum of terms γ ⊗ u^k with deg γ <= max_degree and k <= max_u."""
    rng = as_rng(seed)
    pairs = []
    for degree in range(0, min(max_degree, dim) + 1):
        k = int(rng.integers(0, max_u + 1))
        pairs.append((k, random_polyvector(dim, degree, max_poly_degree, rng)))
    return UPolyElement.from_terms(dim, pairs)
