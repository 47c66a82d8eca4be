"""Identities of polynomials and polyvector fields.

Leibniz rule of partial derivatives, graded antisymmetry of the Schouten bracket,
d_div² = 0, d_div as a derivation of the bracket, the divergence-of-a-wedge
formula and the Poisson test.
"""
from fractions import Fraction

from algebra.polynomial import Polynomial, as_rng, random_polynomial
from algebra.tpoly import (UPolyElement, check_poisson, coordinate_field, d_div, divergence,
                           divergence_wedge_residual, divergence_wedge_signs, random_polyvector, schouten_bracket,
                           u_bracket)
from util.codec import encode_polyvector
from .base_suite import BaseSuite, record


class AlgebraSuite(BaseSuite):

    @staticmethod
    def modify_commandline_options(parser):
        parser.set_defaults(max_u=1)
        return parser

    def run_checks(self):
        self.map_trials(self.trial)
        self.check_poisson_detection()

    def _degrees(self, rng):
        top = min(self.opt.max_degree, self.dim)
        a = int(rng.integers(0, top + 1))
        b = int(rng.integers(0, max(top - a + 1, 0) + 1))
        return a, min(b, self.dim)

    def trial(self, t, seed):
        rng = as_rng(seed)
        dim, vol, pd = self.dim, self.vol, self.opt.max_poly_degree
        out = []

        p = random_polynomial(dim, pd, rng)
        q = random_polynomial(dim, pd, rng)
        leibniz = all((p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i) for i in range(dim))
        out.append(record('leibniz', leibniz, trial=t))

        da, db = self._degrees(rng)
        a = random_polyvector(dim, da, pd, rng)
        b = random_polyvector(dim, db, pd, rng)
        sign = 1 if ((da - 1) * (db - 1)) % 2 else -1
        out.append(record('schouten_antisymmetry', schouten_bracket(a, b) == schouten_bracket(b, a).scale(sign),
                          trial=t, degrees=[da, db]))

        if da >= 2:
            out.append(record('divergence_squared', divergence(divergence(a, vol), vol).is_zero(), trial=t))

        k1, k2 = (int(k) for k in rng.integers(0, self.opt.max_u + 1, size=2))
        e1, e2 = UPolyElement.single(a, k1), UPolyElement.single(b, k2)
        out.append(record('d_div_squared', d_div(d_div(e1, vol), vol).is_zero(), trial=t))
        lhs = d_div(u_bracket(e1, e2), vol)
        parity = -1 if e1.grading() % 2 else 1
        rhs = u_bracket(d_div(e1, vol), e2) + u_bracket(e1, d_div(e2, vol)).scale(parity)
        out.append(record('d_div_derivation', lhs == rhs, trial=t, degrees=[da, db], u=[k1, k2]))

        residual = divergence_wedge_residual(a, b, vol)
        fields = {} if residual.is_zero() else {'counterexample': encode_polyvector(residual)}
        out.append(record('divergence_of_wedge', residual.is_zero(), trial=t, degrees=[da, db],
                          signs=list(divergence_wedge_signs(da, db)), **fields))
        return out

    def check_poisson_detection(self):
        """A constant bivector passes; x·∂x∧∂y fails the divergence condition for the standard volume."""
        if self.dim < 2:
            return
        constant = coordinate_field(self.dim, (0, 1), Polynomial.constant(self.dim, Fraction(3, 2)))
        report = check_poisson(constant, self.vol)
        self.check('poisson_constant_jacobi', report.jacobi_ok, **report.as_dict())
        skewed = coordinate_field(self.dim, (0, 1), Polynomial.variable(self.dim, 0))
        report = check_poisson(skewed, self.vol)
        self.check('poisson_two_variable_jacobi', report.jacobi_ok, **report.as_dict())
        if self.vol.is_standard():
            self.check('poisson_detects_divergence', not report.div_free, **report.as_dict())
