"""The two commuting squares of the bicomplex built from d_Hoch, d_K, 1 - C and Σ."""
from algebra.cyclic import bicomplex_square_check
from algebra.dpoly import random_operator
from .base_suite import BaseSuite, record


class BicomplexSuite(BaseSuite):

    @staticmethod
    def modify_commandline_options(parser):
        parser.set_defaults(max_order=1)
        return parser

    def run_checks(self):
        self.map_trials(self.trial)

    def trial(self, t, seed):
        arity = 1 + t % self.opt.max_arity
        op = random_operator(self.dim, arity, self.opt.max_order, self.opt.max_poly_degree, seed)
        squares = bicomplex_square_check(op, self.vol)
        return [record('square_hochschild_k', squares['star1_ok'], trial=t, arity=arity),
                record('square_sigma', squares['star2_ok'], trial=t, arity=arity)]
