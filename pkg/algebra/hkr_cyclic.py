"""Line graphs Γ(ℓ, k), their operators and the cyclic HKR map.

A line graph has one aerial vertex with ℓ edges landing on a line of
ℓ + 2k ordered positions. Positions hit by an edge are endpoints, the rest
are free. By default every maximal run of free positions has even length,
including the runs before the first and after the last endpoint; pass
boundary_parity=False for the reading that only constrains runs between
consecutive endpoints.
"""
import itertools
import logging
from collections import namedtuple
from fractions import Fraction
from math import factorial

from .cyclic import density_normal_form, integral_normal_form, proportionality, sigma_defect, sigma_projector
from .dpoly import PolyDiffOp, _Accumulator, alternating_operator, hochschild_d
from .errors import ArityError, DegreeError, DimensionMismatchError
from .tpoly import divergence

logger = logging.getLogger(__name__)


class LineGraph(namedtuple('LineGraph', ['ell', 'k', 'endpoints'])):
    """Endpoints are 1-based positions in 1..ell+2k, strictly increasing."""

    __slots__ = ()

    @property
    def size(self):
        return self.ell + 2 * self.k

    def free_positions(self):
        taken = set(self.endpoints)
        return [p for p in range(1, self.size + 1) if p not in taken]

    def free_runs(self):
        """Maximal runs of consecutive free positions, as (start, length), 1-based."""
        runs = []
        start = None
        for p in range(1, self.size + 2):
            free = p <= self.size and p not in self.endpoints
            if free and start is None:
                start = p
            elif not free and start is not None:
                runs.append((start, p - start))
                start = None
        return runs

    def positions(self):
        """0-based slot positions of the endpoints."""
        return [p - 1 for p in self.endpoints]

    def reversed(self):
        n = self.size
        return LineGraph(self.ell, self.k, tuple(sorted(n + 1 - p for p in self.endpoints)))

    def as_dict(self):
        return {'ell': self.ell, 'k': self.k, 'endpoints': list(self.endpoints)}


ShortenedGraph = namedtuple('ShortenedGraph', ['ell', 'size', 'endpoints'])


def _gaps_even(endpoints, size, boundary_parity):
    for a, b in zip(endpoints, endpoints[1:]):
        if (b - a - 1) % 2:
            return False
    if boundary_parity:
        first = endpoints[0] - 1 if endpoints else size
        last = size - endpoints[-1] if endpoints else 0
        if first % 2 or last % 2:
            return False
    return True


def enumerate_line_graphs(ell, k, boundary_parity=True):
    """All of Γ(ℓ, k) in lexicographic order of the endpoint tuples."""
    if ell < 0 or k < 0:
        raise ValueError('ell and k must be non-negative')
    size = ell + 2 * k
    return [LineGraph(ell, k, endpoints)
            for endpoints in itertools.combinations(range(1, size + 1), ell)
            if _gaps_even(endpoints, size, boundary_parity)]


def line_graph_operator(graph, gamma):
    """φ_Γ: the j-th endpoint from the left receives the j-th wedge factor, alternated.

    No 1/ℓ! normalization; free positions receive their argument unchanged.
    """
    if gamma.degree != graph.ell:
        raise DegreeError('a degree %d polyvector on a graph with %d edges' % (gamma.degree, graph.ell))
    return alternating_operator(gamma, graph.size, graph.positions())


def tilde_hkr(gamma, k, boundary_parity=True):
    """k!/(ℓ+2k)! Σ_{Γ∈Γ(ℓ,k)} φ_Γ."""
    ell = gamma.degree
    acc = _Accumulator(gamma.dim)
    for graph in enumerate_line_graphs(ell, k, boundary_parity):
        acc.add_op(line_graph_operator(graph, gamma))
    return acc.build(ell + 2 * k).scale(Fraction(factorial(k), factorial(ell + 2 * k)))


def cyclic_hkr_term(gamma, k, vol, boundary_parity=True):
    """φ^cycl_HKR(γ ⊗ u^k) = [Σ] φ̃(γ ⊗ u^k)."""
    if gamma.dim != vol.dim:
        raise DimensionMismatchError('dimension mismatch: %d vs %d' % (gamma.dim, vol.dim))
    return sigma_projector(tilde_hkr(gamma, k, boundary_parity), vol)


def cyclic_hkr(e, vol, boundary_parity=True):
    """One homogeneous operator per term of the u-graded element <e>, in term order."""
    if e.dim != vol.dim:
        raise DimensionMismatchError('dimension mismatch: %d vs %d' % (e.dim, vol.dim))
    return [cyclic_hkr_term(gamma, k, vol, boundary_parity) for k, gamma in e.items()]


def shorten_graph(graph):
    """Drop the first position of the first free run.

    Returns (ShortenedGraph, sign) with d_Hoch φ_Γ̃ = sign · φ_Γ; sign is
    (-1)^{s + N} for the 0-based start s of the run and N = ℓ + 2k.
    """
    if graph.k == 0:
        raise ArityError('a graph without free positions cannot be shortened')
    start = graph.free_runs()[0][0]
    endpoints = tuple(p - 1 if p > start else p for p in graph.endpoints)
    s = start - 1
    sign = -1 if (s + graph.size) % 2 else 1
    return ShortenedGraph(graph.ell, graph.size - 1, endpoints), sign


def shortened_operator(short, gamma):
    return alternating_operator(gamma, short.size, [p - 1 for p in short.endpoints])


def coboundary_defect(graph, gamma):
    """d_Hoch φ_Γ̃ - sign·φ_Γ, zero for every line graph with k > 0."""
    short, sign = shorten_graph(graph)
    return hochschild_d(shortened_operator(short, gamma)) - line_graph_operator(graph, gamma).scale(sign)


def phi_bar(gamma, k, boundary_parity=True):
    """φ̄ = Σ_{Γ∈Γ(ℓ-1,k+1)} Σ_j Alt with the last wedge factor on the marked slot j.

    j runs over the free positions of Γ and the extra last slot; the
    result has arity ℓ + 2k + 2.
    """
    ell = gamma.degree
    if ell < 1:
        raise DegreeError('φ̄ needs a polyvector of degree >= 1')
    arity = ell + 2 * k + 2
    acc = _Accumulator(gamma.dim)
    for graph in enumerate_line_graphs(ell - 1, k + 1, boundary_parity):
        marks = [p - 1 for p in graph.free_positions()] + [arity - 1]
        for j in marks:
            acc.add_op(alternating_operator(gamma, arity, graph.positions() + [j]))
    return acc.build(arity)


def graph_sum(gamma, k, boundary_parity=True):
    """Σ_{Γ∈Γ(ℓ,k)} φ_Γ(γ) without prefactor."""
    acc = _Accumulator(gamma.dim)
    for graph in enumerate_line_graphs(gamma.degree, k, boundary_parity):
        acc.add_op(line_graph_operator(graph, gamma))
    return acc.build(gamma.degree + 2 * k)


def divergence_pairing_ratio(gamma, k, vol, boundary_parity=True):
    """λ with ∫φ̄ Ω = λ ∫ Σ_{Γ(ℓ-1,k+1)} φ_Γ(div γ) · f_last Ω."""
    lhs = integral_normal_form(phi_bar(gamma, k, boundary_parity), vol)
    rhs = density_normal_form(graph_sum(divergence(gamma, vol), k + 1, boundary_parity), vol)
    return proportionality(lhs, rhs)


def defect_pairing_ratio(gamma, k, vol, boundary_parity=True):
    """λ with ∫ sigma_defect(Σ_{Γ(ℓ,k)} φ_Γ) Ω = λ ∫φ̄ Ω."""
    lhs = integral_normal_form(sigma_defect(graph_sum(gamma, k, boundary_parity)), vol)
    rhs = integral_normal_form(phi_bar(gamma, k, boundary_parity), vol)
    return proportionality(lhs, rhs)


def chain_map_residual(gamma, k, vol, boundary_parity=True):
    """φ^cycl(div γ ⊗ u^{k+1}) - d_Hoch φ^cycl(γ ⊗ u^k); the zero operator."""
    right = hochschild_d(cyclic_hkr_term(gamma, k, vol, boundary_parity))
    if gamma.degree == 0:
        left = PolyDiffOp.zero(gamma.dim, right.arity)
    else:
        left = cyclic_hkr_term(divergence(gamma, vol), k + 1, vol, boundary_parity)
    residual = left - right
    if not residual.is_zero():
        logger.debug('chain map residual at degree %d, k=%d: %r', gamma.degree, k, residual)
    return residual
