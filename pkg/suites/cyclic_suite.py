"""The cyclic shift and the cyclic subcomplex.

C^{n+1} = 1 on arity-n operators, (1 - C)Σ = Σ(1 - C) = 0, closure of cyclic
operators under d_Hoch and the Gerstenhaber bracket, and the Σ-defect relation
whose ratio must be ±1 with one sign for every arity.
"""
from algebra.cyclic import (cyclic_power, cyclic_shift, is_cyclic, sigma, sigma_defect_relation,
                            sigma_projector)
from algebra.dpoly import gerstenhaber, hochschild_d, random_operator
from algebra.polynomial import as_rng
from .base_suite import BaseSuite, record, zero_record

REDRAWS = 8


class CyclicSuite(BaseSuite):

    @staticmethod
    def modify_commandline_options(parser):
        parser.set_defaults(max_order=1)
        return parser

    def run_checks(self):
        self.map_trials(self.trial)
        ratios = {r['ratio'] for r in self.report.records
                  if r['name'] == 'sigma_defect_ratio' and r.get('ratio') is not None}
        self.check('sigma_defect_sign_stable', len(ratios) <= 1, ratios=sorted(ratios))

    def trial(self, t, seed):
        rng = as_rng(seed)
        dim, vol = self.dim, self.vol
        arity = 1 + t % self.opt.max_arity
        op = random_operator(dim, arity, self.opt.max_order, self.opt.max_poly_degree, rng)
        sig = sigma(op, vol)
        out = [
            record('cyclic_power_identity', cyclic_power(op, vol, arity + 1) == op, trial=t, arity=arity),
            zero_record('one_minus_c_after_sigma', sig - cyclic_shift(sig, vol), trial=t, arity=arity),
            zero_record('sigma_after_one_minus_c', sigma(op - cyclic_shift(op, vol), vol), trial=t, arity=arity),
        ]

        projected = sigma_projector(op, vol)
        out.append(record('projector_is_cyclic', is_cyclic(projected, vol), trial=t, arity=arity))
        out.append(record('d_hoch_preserves_cyclic', is_cyclic(hochschild_d(projected), vol), trial=t, arity=arity))
        other = sigma_projector(random_operator(dim, 1 + t % 2, 1, self.opt.max_poly_degree, rng), vol)
        out.append(record('bracket_preserves_cyclic', is_cyclic(gerstenhaber(projected, other), vol),
                          trial=t, arity=[arity, other.arity]))

        ratio = sigma_defect_relation(op, vol)
        for _ in range(REDRAWS):
            if ratio != 0:
                break
            # both sides vanish on this draw; the ratio says nothing
            redraw = random_operator(dim, arity, self.opt.max_order, self.opt.max_poly_degree, rng)
            ratio = sigma_defect_relation(redraw, vol)
        ok = ratio is not None and abs(ratio) == 1
        out.append(record('sigma_defect_ratio', ok, trial=t, arity=arity,
                          ratio=None if ratio is None else str(ratio)))
        return out
