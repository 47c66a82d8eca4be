"""Star products of ∂x∧∂y: the Moyal oracle, the Monte Carlo series and gauge transforms."""
from algebra.hkr_cyclic import cyclic_hkr_term
from algebra.dpoly import random_operator
from algebra.errors import NotPoissonError
from algebra.polynomial import as_rng
from algebra.tpoly import VolumeForm, coordinate_field
from quantize.star_product import (GaugeTransform, associativity_residual, cyclicity_residual, gauge_transform,
                                   is_unital, mc_series, moyal_order, moyal_product, trace_residual)
from .base_suite import BaseSuite


class StarSuite(BaseSuite):

    @staticmethod
    def modify_commandline_options(parser):
        parser.set_defaults(dim=2, trials=2)
        parser.add_argument('--order', type=int, default=2, help='truncation order of the star products (1 or 2)')
        return parser

    def run_checks(self):
        if self.dim < 2:
            self.check('bivector_input', False, reason='needs --dim >= 2')
            return
        gamma = coordinate_field(self.dim, (0, 1))
        self.check_moyal(gamma)
        self.check_gauge(gamma)
        self.check_series(gamma)

    def check_moyal(self, gamma):
        standard = VolumeForm.standard(self.dim)
        moyal = moyal_product(gamma, self.opt.order)
        for n, residual in enumerate(associativity_residual(moyal)):
            self.check_zero('moyal_associativity', residual.exact, order=n)
        for n, residual in enumerate(cyclicity_residual(moyal, standard)):
            self.check_zero('moyal_cyclicity', residual.exact, order=n)
        for n, residual in enumerate(trace_residual(moyal, standard)):
            self.check_zero('moyal_trace', residual.exact, order=n)
        for n in range(1, self.opt.order + 1):
            self.check('moyal_unital', is_unital(moyal_order(gamma, n)), order=n)

    def check_gauge(self, gamma):
        """A random gauge transform keeps the Moyal product associative through the truncation order."""
        moyal = moyal_product(gamma, self.opt.order)
        for t, seed in enumerate(self.seeds):
            rng = as_rng(seed)
            t_ops = [random_operator(self.dim, 1, 2, 1, rng) for _ in range(self.opt.order)]
            transformed = gauge_transform(moyal, GaugeTransform(self.dim, t_ops))
            for n, residual in enumerate(associativity_residual(transformed)):
                self.check_zero('gauge_associativity', residual.exact, trial=t, order=n)

    def check_series(self, gamma):
        try:
            series = mc_series(gamma, self.vol, min(self.opt.order, 2), self.opt.samples,
                               self.opt.seed, self.opt.workers)
        except NotPoissonError as err:
            self.check('poisson_input', False, reason=str(err))
            return
        if series.order >= 1:
            first = series.term(1)
            self.check('series_exact_order_1', first.is_exact())
            self.check_zero('series_order_1_is_cyclic_hkr', first.exact - cyclic_hkr_term(gamma, 0, self.vol))
        if series.order >= 2 and self.vol.is_standard():
            self.check_statistical('series_order_2_is_moyal', series.term(2) - moyal_order(gamma, 2),
                                   graphs=len(series.term(2).parts))
        for n, residual in enumerate(associativity_residual(series)):
            self.check_statistical('series_associativity', residual, order=n)
        for n, residual in enumerate(cyclicity_residual(series, self.vol)):
            self.check_statistical('series_cyclicity', residual, order=n)
