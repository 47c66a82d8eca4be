"""Gauge-fixed configurations of n points in the upper half-plane and m points on the line.

The configuration space modulo z -> az + b (a > 0, b real) is parametrized by
the unit cube [0, 1]^D, D = 2n + m - 2:

  m >= 2   q_1 = 0, q_m = 1, interior q's from the ordered-simplex map
  m == 1   q_1 = 0, p_1 = exp(iπu) on the unit half-circle
  m == 0   p_1 = i

Every other p is the Cayley image i(1+w)/(1-w) of w = sqrt(u_r) exp(2πi u_θ).
Coordinates are ordered p's first, then q's.
"""
import math
from collections import namedtuple

import torch

from algebra.errors import WeightDimensionError
from algebra.polynomial import as_rng

ConfigPoint = namedtuple('ConfigPoint', ['p', 'q'])


def configuration_dimension(n, m):
    if 2 * n + m < 2 or n < 0 or m < 0:
        raise WeightDimensionError('empty configuration space for n=%d, m=%d' % (n, m))
    return 2 * n + m - 2


def harmonic_angle(p, q):
    """arg((q - p)/(q - p̄)) in (-π, π]; p in the closed upper half-plane."""
    p, q = complex(p), complex(q)
    if p == q:
        raise ValueError('coincident points')
    a, b, c, e = p.real, p.imag, q.real, q.imag
    value = math.atan2(-2 * b * (c - a), (c - a) ** 2 + e ** 2 - b ** 2)
    return math.pi if value == -math.pi else value


def angle(p_re, p_im, q_re, q_im):
    """Tensor version of <harmonic_angle>."""
    dx = q_re - p_re
    return torch.atan2(-2 * p_im * dx, dx ** 2 + q_im ** 2 - p_im ** 2)


def _cayley(u_r, u_t):
    r = torch.sqrt(u_r)
    t = 2 * math.pi * u_t
    wr, wi = r * torch.cos(t), r * torch.sin(t)
    den = (1 - wr) ** 2 + wi ** 2
    return -2 * wi / den, (1 - r ** 2) / den


def configuration_map(n, m):
    """Return u -> (p_re, p_im, q) for a single coordinate vector u of length D."""
    dim = configuration_dimension(n, m)
    interior = max(m - 2, 0)

    def fn(u):
        zero = u[0] * 0 if dim else torch.zeros((), dtype=torch.float64)
        idx = 0
        p_re, p_im = [], []
        for v in range(n):
            if v == 0 and m == 1:
                theta = math.pi * u[idx]
                idx += 1
                p_re.append(torch.cos(theta))
                p_im.append(torch.sin(theta))
            elif v == 0 and m == 0:
                p_re.append(zero)
                p_im.append(zero + 1)
            else:
                re, im = _cayley(u[idx], u[idx + 1])
                idx += 2
                p_re.append(re)
                p_im.append(im)
        q = []
        if m >= 1:
            q.append(zero)
        t = zero
        for j in range(1, interior + 1):
            t = 1 - (1 - t) * (1 - u[idx]) ** (1.0 / (interior - j + 1))
            idx += 1
            q.append(t)
        if m >= 2:
            q.append(zero + 1)
        empty = torch.zeros(0, dtype=torch.float64)
        return (torch.stack(p_re) if p_re else empty, torch.stack(p_im) if p_im else empty,
                torch.stack(q) if q else empty)

    return fn


def free_coordinates(n, m):
    """u -> the D real coordinates (free p's, interior q's) the cube parametrizes."""
    conf = configuration_map(n, m)
    interior = max(m - 2, 0)

    def fn(u):
        p_re, p_im, q = conf(u)
        coords = []
        for v in range(n):
            if v == 0 and m == 1:
                coords.append(torch.atan2(p_im[0], p_re[0]))
            elif v == 0 and m == 0:
                continue
            else:
                coords.extend([p_re[v], p_im[v]])
        coords.extend(q[1:1 + interior])
        return torch.stack(coords)

    return fn


def sample_configuration(n, m, rng):
    """Draw a gauge-fixed configuration.

    Returns (ConfigPoint, jacobian_factor) where jacobian_factor is
    |det ∂(coordinates)/∂u| of the cube parametrization at the sample.
    """
    dim = configuration_dimension(n, m)
    rng = as_rng(rng)
    u = torch.tensor(rng.random(dim), dtype=torch.float64).clamp(1e-9, 1 - 1e-9)
    p_re, p_im, q = configuration_map(n, m)(u)
    point = ConfigPoint([complex(a, b) for a, b in zip(p_re.tolist(), p_im.tolist())], q.tolist())
    if dim == 0:
        return point, 1.0
    jac = torch.func.jacrev(free_coordinates(n, m))(u)
    return point, abs(float(torch.linalg.det(jac)))
