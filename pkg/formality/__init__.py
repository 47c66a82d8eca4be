"""Admissible graphs, Monte Carlo weights and the Taylor components of the formality morphism."""
from .graphs import AdmissibleGraph, enumerate_admissible, profile_graphs
from .configuration import ConfigPoint, harmonic_angle, sample_configuration
from .weights import WeightEstimate, weight_mc
from .stochastic import StochasticOp
from .taylor import cyclic_component, graph_operator, linf_residual, taylor_component
