"""Sign and normalization conventions, emitted into every report.

Values that are measured at runtime (the Σ-defect ratio, the pairing ratios)
are filled in by <resolve_conventions>, so a change in behaviour shows up as a
change in the report rather than a silent drift.
"""
from fractions import Fraction

from .cyclic import sigma_defect_relation
from .dpoly import identity_op, mult_op
from .hkr_cyclic import defect_pairing_ratio, divergence_pairing_ratio
from .polynomial import Polynomial
from .tpoly import VolumeForm, coordinate_field

CONVENTIONS = {
    'hochschild_d': 'd(psi) = [m, psi]; equals the alternating Hochschild sum times (-1)^(n-1)',
    'd_K': 'd_Hoch(psi) - psi(a_1..a_n)*a_(n+1); d_K h + h d_K = -Id',
    'schouten': '[X_0^..., Y_0^...] = sum (-1)^(i+j) [X_i, Y_j]^rest; [P, f] = sum_r (-1)^r X_r(f) rest',
    'divergence': 'div(P)^J = sum_i (d_i + d_i phi) P^(J i)',
    'divergence_of_wedge': '[a, b] = (-1)^|b| (div(a^b) - (-1)^|b| div(a)^b - a^div(b))',
    'line_graphs': 'every free run has even length, boundary runs included',
    'shorten_graph': 'd_Hoch(phi_short) = (-1)^(s+N) phi',
    'angle': 'arg((q-p)/(q-conj(p))); phi(i, 1) = -pi/2',
    'gauge_fixing': 'm>=2: q_1=0, q_m=1; m=1: q_1=0, p_1=exp(i pi u); m=0: p_1=i',
    'orientation': '(-1)^m for m >= 2, +1 otherwise',
    'star_product': 'B_1 = cyclic_hkr(gamma), B_n = C_n(gamma, ..., gamma)/n!',
}


def _ratio(value):
    return None if value is None else str(Fraction(value))


def resolve_conventions():
    """Measure the runtime-resolved signs on the smallest instances."""
    vol = VolumeForm.standard(2)
    xi = coordinate_field(2, (0,), Polynomial.variable(2, 1))
    gamma = coordinate_field(2, (0, 1), Polynomial.variable(2, 0))
    resolved = dict(CONVENTIONS)
    resolved['sigma_defect_ratio'] = {
        'arity_1': _ratio(sigma_defect_relation(identity_op(2), vol)),
        'arity_2': _ratio(sigma_defect_relation(mult_op(2).times(Polynomial.variable(2, 0)), vol)),
    }
    resolved['divergence_pairing_ratio'] = _ratio(divergence_pairing_ratio(gamma, 0, vol))
    resolved['defect_pairing_ratio'] = {
        'k_0': _ratio(defect_pairing_ratio(xi, 0, vol)),
        'k_1': _ratio(defect_pairing_ratio(xi, 1, vol)),
    }
    return resolved
