"""The Hochschild complex of polynomial functions.

d_Hoch² = 0, d_Hoch = [m, ·], [m, m] = 0, d_K² = 0, the homotopy identity of the
K-complex and the compatibility of the HKR map with the brackets.
"""
from algebra.dpoly import (d_K, gerstenhaber, hkr_bracket_sign, hochschild_d, homotopy_identity,
                           mult_op, random_operator)
from algebra.polynomial import as_rng
from algebra.tpoly import random_polyvector
from .base_suite import BaseSuite, zero_record


class HochschildSuite(BaseSuite):

    @staticmethod
    def modify_commandline_options(parser):
        parser.add_argument('--hkr-trials', type=int, default=3, help='# random pairs for the HKR bracket compatibility check')
        return parser

    def run_checks(self):
        self.check_zero('m_bracket_m', gerstenhaber(mult_op(self.dim), mult_op(self.dim)))
        self.map_trials(self.trial)
        self.check_hkr_brackets()

    def trial(self, t, seed):
        arity = t % (self.opt.max_arity + 1)
        op = random_operator(self.dim, arity, self.opt.max_order, self.opt.max_poly_degree, seed)
        d_op = hochschild_d(op)
        return [
            zero_record('d_hoch_squared', hochschild_d(d_op), trial=t, arity=arity),
            zero_record('d_hoch_is_bracket_with_m', d_op - gerstenhaber(mult_op(self.dim), op), trial=t, arity=arity),
            zero_record('d_k_squared', d_K(d_K(op)), trial=t, arity=arity),
            zero_record('homotopy_identity', homotopy_identity(op), trial=t, arity=arity),
        ]

    def check_hkr_brackets(self):
        """[hkr γ₁, hkr γ₂] ∓ hkr[γ₁, γ₂] is a coboundary for one of the two signs."""
        degrees = [(1, 1)] + ([(1, 2)] if self.dim >= 2 else [])
        for t, seed in enumerate(self.seeds[:self.opt.hkr_trials]):
            rng = as_rng(seed)
            for da, db in degrees:
                g1 = random_polyvector(self.dim, da, 1, rng)
                g2 = random_polyvector(self.dim, db, 1, rng)
                sign = hkr_bracket_sign(g1, g2)
                self.check('hkr_bracket_compatibility', sign is not None, trial=t, degrees=[da, db], sign=sign)
