"""Closed forms of the cyclic HKR map, line graph counts and the graph identities.

Closed forms, checked exactly for random inputs:
    f ⊗ u^0          ->  f
    ξ ⊗ u^0          ->  ξ(f) + ½ div ξ · f
    f ⊗ u^1          ->  ½ f · f₁ · f₂
    γ ⊗ u^0          ->  hkr(γ) + 1/6 (div γ(f₁) f₂ - f₁ div γ(f₂))
    ξ ⊗ u^1          ->  1/6 (ξ(f₁) f₂ f₃ + f₁ f₂ ξ(f₃)) + 1/12 div ξ · f₁ f₂ f₃
"""
from fractions import Fraction
from math import comb

from algebra.cyclic import is_cyclic
from algebra.dpoly import alternating_operator, function_op, hkr, hochschild_d, product_op, vector_field_op
from algebra.hkr_cyclic import (coboundary_defect, cyclic_hkr_term, defect_pairing_ratio,
                                divergence_pairing_ratio, enumerate_line_graphs, line_graph_operator, tilde_hkr)
from algebra.polynomial import as_rng, random_polynomial
from algebra.tpoly import divergence, function, random_polyvector
from .base_suite import BaseSuite, record, zero_record

HALF, SIXTH, TWELFTH = Fraction(1, 2), Fraction(1, 6), Fraction(1, 12)
REDRAWS = 8


def brute_force_count(ell, k, boundary_parity=True):
    """|Γ(ℓ, k)| from the run lengths of every placement written as a string."""
    size = ell + 2 * k
    count = 0
    for mask in range(2 ** size):
        if bin(mask).count('1') != ell:
            continue
        line = ''.join('E' if mask >> p & 1 else '.' for p in range(size))
        runs = line.split('E')
        checked = runs if boundary_parity else runs[1:-1]
        if all(len(run) % 2 == 0 for run in checked):
            count += 1
    return count


class HkrSuite(BaseSuite):

    @staticmethod
    def modify_commandline_options(parser):
        parser.set_defaults(trials=5, max_poly_degree=1)
        parser.add_argument('--max-graph-size', type=int, default=5, help='graph identities are checked for all ℓ + 2k up to this size')
        return parser

    def run_checks(self):
        self.check_counts()
        self.map_trials(self.trial)
        self.check_graph_identities()
        self.check_pairing_ratios()

    def check_counts(self):
        self.check('count_gamma_2_1', len(enumerate_line_graphs(2, 1)) == 3)
        self.check('count_gamma_1_1', len(enumerate_line_graphs(1, 1)) == 2)
        self.check('count_gamma_2_1_literal', len(enumerate_line_graphs(2, 1, boundary_parity=False)) == 4)
        self.check('count_gamma_1_1_literal', len(enumerate_line_graphs(1, 1, boundary_parity=False)) == 3)
        for ell, k in self._shapes(self.opt.max_graph_size, min_ell=0, cap_dim=False):
            for bp in (True, False):
                graphs = enumerate_line_graphs(ell, k, bp)
                expected = brute_force_count(ell, k, bp)
                ok = len(graphs) == expected and set(g.reversed() for g in graphs) == set(graphs)
                if bp:
                    ok = ok and expected == comb(ell + k, ell)
                self.check('line_graph_count', ok, ell=ell, k=k, boundary_parity=bp, count=len(graphs))

    def _shapes(self, size, min_ell=0, cap_dim=True):
        for ell in range(min_ell, size + 1):
            if cap_dim and ell > self.dim:
                break
            for k in range((size - ell) // 2 + 1):
                yield ell, k

    def trial(self, t, seed):
        rng = as_rng(seed)
        dim, vol, pd = self.dim, self.vol, self.opt.max_poly_degree
        f = random_polynomial(dim, pd, rng)
        xi = random_polyvector(dim, 1, pd, rng)
        div_xi = divergence(xi, vol).function_value()
        out = []

        out.append(zero_record('golden_function', cyclic_hkr_term(function(f), 0, vol) - function_op(f), trial=t))
        expected = vector_field_op(xi) + product_op(dim, 1, div_xi.scale(HALF))
        out.append(zero_record('golden_vector_field', cyclic_hkr_term(xi, 0, vol) - expected, trial=t))
        expected = product_op(dim, 2, f.scale(HALF))
        out.append(zero_record('golden_function_u', cyclic_hkr_term(function(f), 1, vol) - expected, trial=t))
        expected = (alternating_operator(xi, 3, [0]) + alternating_operator(xi, 3, [2])).scale(SIXTH) + \
            product_op(dim, 3, div_xi.scale(TWELFTH))
        out.append(zero_record('golden_vector_field_u', cyclic_hkr_term(xi, 1, vol) - expected, trial=t))

        if dim >= 2:
            gamma = random_polyvector(dim, 2, pd, rng)
            div_gamma = divergence(gamma, vol)
            expected = hkr(gamma) + (alternating_operator(div_gamma, 2, [0]) -
                                     alternating_operator(div_gamma, 2, [1])).scale(SIXTH)
            out.append(zero_record('golden_bivector', cyclic_hkr_term(gamma, 0, vol) - expected, trial=t))
            out.append(zero_record('tilde_hkr_is_hkr', tilde_hkr(gamma, 0) - hkr(gamma), trial=t))
            out.append(record('cyclic_hkr_is_cyclic', is_cyclic(cyclic_hkr_term(gamma, 1, vol), vol), trial=t))
        return out

    def check_graph_identities(self):
        """d_Hoch φ_Γ = 0 for every graph and d_Hoch φ_Γ̃ = ±φ_Γ whenever k > 0."""
        rng = as_rng(self.seeds[0])
        for ell, k in self._shapes(self.opt.max_graph_size):
            gamma = random_polyvector(self.dim, ell, self.opt.max_poly_degree, rng)
            for graph in enumerate_line_graphs(ell, k):
                self.check_zero('graph_cocycle', hochschild_d(line_graph_operator(graph, gamma)),
                                graph=graph.as_dict())
                if k:
                    self.check_zero('graph_coboundary', coboundary_defect(graph, gamma), graph=graph.as_dict())

    def check_pairing_ratios(self):
        """Both pairing identities hold up to one sign, the same for every shape."""
        rng = as_rng(self.seeds[0])
        signs = {'divergence': set(), 'defect': set()}
        for ell, k in self._shapes(min(self.opt.max_graph_size, 4), min_ell=1):
            for kind, fn, size in (('divergence', divergence_pairing_ratio, 1),
                                   ('defect', defect_pairing_ratio, k + 1)):
                ratio = Fraction(0)
                for _ in range(REDRAWS):
                    # a zero ratio means both sides vanish, e.g. for a divergence-free draw
                    ratio = fn(random_polyvector(self.dim, ell, self.opt.max_poly_degree, rng), k, self.vol)
                    if ratio != 0:
                        break
                ok = ratio is not None and abs(ratio) == size
                if ok:
                    signs[kind].add(1 if ratio > 0 else -1)
                self.check('%s_pairing_ratio' % kind, ok, ell=ell, k=k,
                           ratio=None if ratio is None else str(ratio))
        for kind, found in sorted(signs.items()):
            self.check('%s_pairing_sign_stable' % kind, len(found) <= 1, signs=sorted(found))
