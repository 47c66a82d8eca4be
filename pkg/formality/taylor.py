"""Graph operators, Taylor components C̃_n, cyclic components C_n = [Σ]∘C̃_n and the L∞ residual."""
import itertools
import logging

from algebra.cyclic import sigma_projector
from algebra.dpoly import PolyDiffOp, _Accumulator, gerstenhaber, hochschild_d
from algebra.errors import ArityError, DegreeError, DimensionMismatchError, UnsupportedOrderError
from algebra.hkr_cyclic import cyclic_hkr_term, tilde_hkr
from algebra.polynomial import Polynomial
from algebra.tpoly import UPolyElement, d_div, u_bracket
from .graphs import eta_profile, ground_arity, profile_graphs
from .stochastic import StochasticOp
from .weights import weight_mc

logger = logging.getLogger(__name__)


def _index(dim, axes):
    alpha = [0] * dim
    for i in axes:
        alpha[i] += 1
    return tuple(alpha)


def graph_operator(graph, etas):
    """The arity-m operator C̃_Γ(η_1, ..., η_n).

    Every usual edge carries a summation index. Aerial vertex v contributes the
    skew component of its polyvector on the indices of its star, differentiated
    by the indices of the edges landing on v; ground vertex j receives the
    derivatives of the edges landing on it. Dashed edges carry no index.
    """
    profile = eta_profile(etas)
    if profile != graph.profile():
        raise DegreeError('insertions %s do not match the graph profile %s' % (profile, graph.profile()))
    gammas = [eta.items()[0][1] for eta in etas]
    dim = gammas[0].dim
    if any(g.dim != dim for g in gammas):
        raise DimensionMismatchError('insertions of different dimensions')
    edges = graph.usual_edges
    stars = [[e for e, (s, _) in enumerate(edges) if s == v] for v in range(graph.n)]
    incoming = {t: [e for e, (_, target) in enumerate(edges) if target == t]
                for t in list(range(graph.n)) + [-j for j in range(1, graph.m + 1)]}
    one = Polynomial.constant(dim, 1)
    acc = _Accumulator(dim)
    for assignment in itertools.product(range(dim), repeat=len(edges)):
        coeff = one
        for v in range(graph.n):
            comp = gammas[v].component(tuple(assignment[e] for e in stars[v]))
            if comp.is_zero():
                coeff = None
                break
            coeff = coeff * comp.derive(_index(dim, [assignment[e] for e in incoming[v]]))
            if coeff.is_zero():
                break
        if coeff is None or coeff.is_zero():
            continue
        slots = tuple(_index(dim, [assignment[e] for e in incoming[-j]]) for j in range(1, graph.m + 1))
        acc.add(slots, coeff)
    return acc.build(graph.m)


def taylor_component(n, etas, m, samples, seed, workers=1):
    """C̃_n(η_1, ..., η_n) on m arguments: Σ_Γ W_Γ · C̃_Γ over graphs of matching profile."""
    if len(etas) != n:
        raise ArityError('%d insertions for the component C_%d' % (len(etas), n))
    dim = etas[0].dim
    if any(eta.is_zero() for eta in etas):
        return StochasticOp(PolyDiffOp.zero(dim, m))
    profile = eta_profile(etas)
    if ground_arity(profile) != m or 2 * n + m < 2:
        return StochasticOp(PolyDiffOp.zero(dim, m))
    parts = {}
    for graph in profile_graphs(n, m, profile):
        op = graph_operator(graph, etas)
        if op.is_zero():
            continue
        parts[graph] = (weight_mc(graph, samples, seed, workers), op)
    logger.info('C_%d on %d arguments: %d contributing graphs', n, m, len(parts))
    return StochasticOp(PolyDiffOp.zero(dim, m), parts)


def cyclic_component(n, etas, m, vol, samples, seed, workers=1):
    """[Σ] ∘ C̃_n."""
    return taylor_component(n, etas, m, samples, seed, workers).map(lambda op: sigma_projector(op, vol))


def _first_component(element, arity, vol, project):
    """C_1 (or C̃_1) of the terms of <element> that land in the given arity."""
    out = PolyDiffOp.zero(element.dim, arity)
    for k, gamma in element.items():
        if gamma.degree + 2 * k != arity:
            continue
        out = out + (cyclic_hkr_term(gamma, k, vol) if project else tilde_hkr(gamma, k))
    return out


def _natural_arity(element):
    arities = {gamma.degree + 2 * k for k, gamma in element.items()}
    if len(arities) != 1:
        raise DegreeError('expected an element landing in a single arity')
    return arities.pop()


def linf_residual(n, etas, m, vol, mode='exact', samples=100000, seed=0, workers=1, project=True,
                  max_mc_n=2):
    """The L∞ relation at n insertions, evaluated on m + 1 arguments.

    n = 1: C_1(d_div η) - d_Hoch C_1(η), exact.
    n = 2: d_Hoch C_2(η_1, η_2) + [C_1 η_1, C_1 η_2] - C_1[η_1, η_2]
           - C_2(d_div η_1, η_2) - (-1)^{|η_1|} C_2(η_1, d_div η_2),
    with C_2 from Monte Carlo weights. Returns a StochasticOp.
    """
    if len(etas) != n:
        raise ArityError('%d insertions for the relation at n=%d' % (len(etas), n))
    dim = etas[0].dim
    if n == 1:
        eta = etas[0]
        out = _first_component(d_div(eta, vol), m + 1, vol, project) - \
            hochschild_d(_first_component(eta, m, vol, project))
        return StochasticOp(out)
    if mode == 'exact':
        raise UnsupportedOrderError('no exact weights for n=%d; use mode=mc' % n)
    if n > max_mc_n or n != 2:
        raise UnsupportedOrderError('Monte Carlo residuals are limited to n <= %d' % min(max_mc_n, 2))

    eta1, eta2 = etas

    def component(e1, e2, arity):
        if e1.is_zero() or e2.is_zero():
            return StochasticOp(PolyDiffOp.zero(dim, arity))
        if project:
            return cyclic_component(2, [e1, e2], arity, vol, samples, seed, workers)
        return taylor_component(2, [e1, e2], arity, samples, seed, workers)

    residual = component(eta1, eta2, m).map(hochschild_d)
    a1, a2 = _natural_arity(eta1), _natural_arity(eta2)
    if a1 + a2 - 1 == m + 1:
        residual = residual + gerstenhaber(_first_component(eta1, a1, vol, project),
                                           _first_component(eta2, a2, vol, project))
    residual = residual - _first_component(u_bracket(eta1, eta2), m + 1, vol, project)
    residual = residual - component(d_div(eta1, vol), eta2, m + 1)
    sign = -1 if eta1.grading() % 2 else 1
    residual = residual - component(eta1, d_div(eta2, vol), m + 1).scale(sign)
    return residual


def single(gamma, k=0):
    """γ ⊗ u^k as a u-graded element."""
    return UPolyElement.single(gamma, k)
