"""Monte Carlo weights with one aerial vertex recover the line graph coefficients.

C̃_1(γ ⊗ u^k), assembled from estimated weights, is compared coefficient by
coefficient with the exact k!/(ℓ+2k)! Σ φ_Γ.
"""
from algebra.hkr_cyclic import tilde_hkr
from algebra.polynomial import as_rng
from algebra.tpoly import random_polyvector
from formality.graphs import AdmissibleGraph
from formality.taylor import single, taylor_component
from formality.weights import weight_mc
from .base_suite import BaseSuite

CASES = ((1, 0), (1, 1), (2, 0))


class WeightsN1Suite(BaseSuite):

    @staticmethod
    def modify_commandline_options(parser):
        parser.set_defaults(trials=1, max_poly_degree=1)
        return parser

    def run_checks(self):
        anchor = AdmissibleGraph(1, 1, ((0, -1),), ())
        estimate = weight_mc(anchor, self.opt.samples, self.opt.seed, self.opt.workers)
        self.check('weight_single_edge', abs(estimate.value - 1.0) < 1e-9 and estimate.std_error < 1e-9,
                   estimate=estimate.value, std_error=estimate.std_error)

        for t, seed in enumerate(self.seeds):
            rng = as_rng(seed)
            for ell, k in CASES:
                if ell > self.dim:
                    continue
                gamma = random_polyvector(self.dim, ell, self.opt.max_poly_degree, rng)
                estimated = taylor_component(1, [single(gamma, k)], ell + 2 * k,
                                             self.opt.samples, self.opt.seed, self.opt.workers)
                self.check_statistical('weight_recovery', estimated - tilde_hkr(gamma, k),
                                       trial=t, ell=ell, k=k, graphs=len(estimated.parts))
