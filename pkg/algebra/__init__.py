"""Exact algebra: polynomials, polyvectors, polydifferential operators and the cyclic HKR map."""
from .polynomial import Polynomial, partial_derivative, poly_add, poly_mul, random_polynomial
from .tpoly import (PolyVector, UPolyElement, VolumeForm, check_poisson, d_div, divergence,
                    schouten_bracket, u_bracket, wedge)
from .dpoly import (PolyDiffOp, apply, cup, d_K, gerstenhaber, hkr, hochschild_d, homotopy_h,
                    mult_op)
from .cyclic import (bicomplex_square_check, cyclic_shift, density_normal_form, is_cyclic, sigma,
                     sigma_defect, sigma_projector)
from .hkr_cyclic import (LineGraph, chain_map_residual, cyclic_hkr, enumerate_line_graphs,
                         line_graph_operator, phi_bar, shorten_graph, tilde_hkr)
