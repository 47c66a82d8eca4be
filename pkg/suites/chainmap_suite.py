"""The cyclic HKR map is a chain map: φ^cycl(div γ ⊗ u^{k+1}) = d_Hoch φ^cycl(γ ⊗ u^k)."""
import logging

from algebra.hkr_cyclic import chain_map_residual
from algebra.polynomial import as_rng
from algebra.tpoly import random_polyvector
from .base_suite import BaseSuite, zero_record

logger = logging.getLogger(__name__)


class ChainmapSuite(BaseSuite):

    @staticmethod
    def modify_commandline_options(parser):
        parser.set_defaults(max_poly_degree=2, max_u=2)
        return parser

    def run_checks(self):
        self.map_trials(self.trial)

    def trial(self, t, seed):
        rng = as_rng(seed)
        top = min(self.opt.max_degree, self.dim)
        degree = t % (top + 1)
        k = (t // (top + 1)) % (self.opt.max_u + 1)
        gamma = random_polyvector(self.dim, degree, self.opt.max_poly_degree, rng)
        logger.debug('chain map trial %d: degree %d, u^%d', t, degree, k)
        return [zero_record('chain_map', chain_map_residual(gamma, k, self.vol), trial=t, degree=degree, k=k)]
