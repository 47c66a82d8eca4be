"""Monte Carlo estimates of the graph weights W_Γ.

W_Γ = orientation · ∏ k_v! · ∏ 1/#Star(v)! · (2π)^{-D} · ∫_{[0,1]^D} det(∂φ_e/∂u) du

where φ_e runs over the edge angles in the order given by AdmissibleGraph.forms.
The determinant is evaluated in float64 with torch.func.vmap(jacrev(...)), the
samples are split evenly over the workers, each worker draws from its own
torch.Generator seeded with seed * 10007 + worker, and the per-worker moments are merged
in worker order, so an estimate depends only on (graph, samples, seed, workers).
"""
import logging
import math
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import torch
from torch.func import jacrev, vmap

from algebra.errors import WeightDimensionError
from .configuration import angle, configuration_dimension, configuration_map

logger = logging.getLogger(__name__)

CHUNK = 4096
CLAMP = 1e-9


class WeightEstimate(namedtuple('WeightEstimate', ['value', 'std_error', 'samples', 'seed'])):
    __slots__ = ()

    def scale(self, factor):
        return WeightEstimate(self.value * factor, abs(self.std_error * factor), self.samples, self.seed)

    def as_dict(self):
        return {'value': self.value, 'std_error': self.std_error, 'samples': self.samples, 'seed': self.seed}


def orientation_sign(m):
    return -1 if m >= 2 and m % 2 else 1


def edge_angles(graph):
    """u -> the vector of edge angles of <graph>, one per 1-form."""
    conf = configuration_map(graph.n, graph.m)
    forms = graph.forms()

    def fn(u):
        p_re, p_im, q = conf(u)
        out = []
        for s, t in forms:
            if t >= 0:
                out.append(angle(p_re[s], p_im[s], p_re[t], p_im[t]))
            else:
                q_t = q[-t - 1]
                out.append(angle(p_re[s], p_im[s], q_t, q_t * 0))
        return torch.stack(out)

    return fn


def prefactor(graph):
    factor = 1.0
    for size, dashes in graph.profile():
        factor *= math.factorial(dashes) / math.factorial(size)
    return orientation_sign(graph.m) * factor / (2 * math.pi) ** graph.dimension()


def _merge(a, b):
    """Combine (count, mean, M2) moments of two batches."""
    n_a, mean_a, m2_a = a
    n_b, mean_b, m2_b = b
    n = n_a + n_b
    if n == 0:
        return 0, 0.0, 0.0
    delta = mean_b - mean_a
    return n, mean_a + delta * n_b / n, m2_a + m2_b + delta ** 2 * n_a * n_b / n


def _worker_moments(graph, count, seed, worker):
    dim = graph.dimension()
    generator = torch.Generator().manual_seed(seed * 10007 + worker)
    jac = vmap(jacrev(edge_angles(graph)))
    moments = (0, 0.0, 0.0)
    remaining = count
    while remaining > 0:
        size = min(CHUNK, remaining)
        u = torch.rand((size, dim), generator=generator, dtype=torch.float64).clamp(CLAMP, 1 - CLAMP)
        dets = torch.linalg.det(jac(u))
        dets = torch.nan_to_num(dets, nan=0.0, posinf=0.0, neginf=0.0)
        mean = dets.mean()
        moments = _merge(moments, (size, float(mean), float(((dets - mean) ** 2).sum())))
        remaining -= size
    return moments


def _split(samples, workers):
    return [samples // workers + (1 if w < samples % workers else 0) for w in range(workers)]


@lru_cache(maxsize=None)
def weight_mc(graph, samples, seed, workers=1):
    """Monte Carlo estimate of W_Γ.

    Parameters:
        graph (AdmissibleGraph) -- a graph whose form count equals its dimension
        samples (int)           -- total number of points in the unit cube
        seed (int)              -- base seed of the per-worker generators
        workers (int)           -- number of worker threads
    """
    graph.validate()
    dim = configuration_dimension(graph.n, graph.m)
    if graph.form_count() != dim:
        raise WeightDimensionError('graph carries %d forms on a %d-dimensional space'
                                   % (graph.form_count(), dim))
    forms = graph.forms()
    if len(set(forms)) != len(forms):
        return WeightEstimate(0.0, 0.0, samples, seed)
    if dim == 0:
        return WeightEstimate(prefactor(graph), 0.0, samples, seed)
    sizes = _split(samples, max(workers, 1))
    with ThreadPoolExecutor(max_workers=max(workers, 1)) as pool:
        futures = [pool.submit(_worker_moments, graph, size, seed, w) for w, size in enumerate(sizes)]
        moments = [f.result() for f in futures]
    merged = (0, 0.0, 0.0)
    for part in moments:
        merged = _merge(merged, part)
    _, mean, m2 = merged
    var = m2 / samples
    estimate = WeightEstimate(mean, math.sqrt(var / samples), samples, seed).scale(prefactor(graph))
    logger.debug('weight %s: %.6g +- %.2g', graph, estimate.value, estimate.std_error)
    return estimate
