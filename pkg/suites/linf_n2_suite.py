"""The L∞ relation on constant divergence-free bivectors.

At one insertion the residual is the chain map residual and must vanish
exactly; at two insertions every coefficient must be consistent with zero
within the propagated Monte Carlo errors.
"""
from fractions import Fraction

from algebra.polynomial import Polynomial, as_rng
from algebra.tpoly import check_poisson, coordinate_field
from formality.taylor import linf_residual, single
from .base_suite import BaseSuite


class LinfN2Suite(BaseSuite):

    @staticmethod
    def modify_commandline_options(parser):
        parser.set_defaults(dim=2, trials=2, samples=1000000)
        parser.add_argument('--max-m', type=int, default=3, help='the relation is evaluated for m = 2..max-m')
        return parser

    def run_checks(self):
        if self.dim < 2:
            self.check('bivector_input', False, reason='needs --dim >= 2')
            return
        for t, seed in enumerate(self.seeds):
            rng = as_rng(seed)
            c = Fraction(int(rng.integers(1, 6)), int(rng.integers(1, 4)))
            gamma = coordinate_field(self.dim, (0, 1), Polynomial.constant(self.dim, c))
            poisson = check_poisson(gamma, self.vol)
            if not poisson.ok:
                self.check('poisson_input', False, trial=t, **poisson.as_dict())
                continue
            eta = single(gamma)
            residual = linf_residual(1, [eta], 2, self.vol, mode='exact')
            self.check_zero('linf_n1', residual.exact, trial=t, c=str(c))
            for m in range(2, self.opt.max_m + 1):
                for project in (True, False):
                    residual = linf_residual(2, [eta, eta], m, self.vol, mode='mc', samples=self.opt.samples,
                                             seed=self.opt.seed, workers=self.opt.workers, project=project)
                    self.check_statistical('linf_n2', residual, trial=t, c=str(c), m=m, project=project)
