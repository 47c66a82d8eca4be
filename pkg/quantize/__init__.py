"""Star products, gauge transforms and their residuals."""
from .star_product import (GaugeTransform, StarProduct, associativity_residual, cyclicity_residual,
                           gauge_transform, is_adjoint, mc_series, moyal_order, moyal_product,
                           trace_residual)
