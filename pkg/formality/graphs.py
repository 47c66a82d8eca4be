"""Admissible graphs with dashed pairs.

Aerial vertices are 0..n-1, ground vertices are encoded -1..-m. A usual edge is
(source, target); a dashed pair (source, j) stands for the two dashed edges from
<source> to the ground vertices j and j+1 (1-based). Stars are ordered: the
position of an edge among the edges of its source is its label.
"""
import itertools
from collections import namedtuple
from math import comb

from algebra.errors import DegreeError, WeightDimensionError


class AdmissibleGraph(namedtuple('AdmissibleGraph', ['n', 'm', 'usual_edges', 'dashed_pairs'])):
    __slots__ = ()

    def star(self, v):
        return [t for s, t in self.usual_edges if s == v]

    def dashes(self, v):
        return [j for s, j in self.dashed_pairs if s == v]

    def form_count(self):
        return len(self.usual_edges) + 2 * len(self.dashed_pairs)

    def dimension(self):
        """Dimension 2n + m - 2 of the gauge-fixed configuration space."""
        return 2 * self.n + self.m - 2

    def forms(self):
        """Edges carrying a 1-form, in wedge order: usual edges by source, then dashed pairs."""
        out = []
        for v in range(self.n):
            out.extend((v, t) for t in self.star(v))
        for v in range(self.n):
            for j in self.dashes(v):
                out.extend([(v, -j), (v, -(j + 1))])
        return out

    def profile(self):
        """((#Star(v), number of dashed pairs at v) for every aerial vertex)."""
        return tuple((len(self.star(v)), len(self.dashes(v))) for v in range(self.n))

    def validate(self):
        for s, t in self.usual_edges:
            if not 0 <= s < self.n:
                raise WeightDimensionError('edge source %d is not an aerial vertex' % s)
            if s == t or not (0 <= t < self.n or -self.m <= t <= -1):
                raise WeightDimensionError('invalid edge target %d' % t)
        for s, j in self.dashed_pairs:
            if not 0 <= s < self.n or not 1 <= j < self.m:
                raise WeightDimensionError('invalid dashed pair (%d, %d)' % (s, j))
        return self

    def as_dict(self):
        return {'n': self.n, 'm': self.m,
                'usual_edges': [list(e) for e in self.usual_edges],
                'dashed_pairs': [list(d) for d in self.dashed_pairs]}


def _stars(v, n, m, size):
    targets = [t for t in range(n) if t != v] + [-j for j in range(1, m + 1)]
    return list(itertools.permutations(targets, size))


def _dash_sets(m, count):
    out = []
    for js in itertools.combinations(range(1, m), count):
        if all(b - a >= 2 for a, b in zip(js, js[1:])):
            out.append(js)
    return out


def profile_graphs(n, m, profile):
    """All graphs whose vertex v has profile[v] = (#Star(v), dashed pairs at v)."""
    per_vertex = []
    for v, (size, dashes) in enumerate(profile):
        choices = [(star, js) for star in _stars(v, n, m, size) for js in _dash_sets(m, dashes)]
        per_vertex.append(choices)
    graphs = []
    for combo in itertools.product(*per_vertex):
        usual = tuple((v, t) for v, (star, _) in enumerate(combo) for t in star)
        dashed = tuple((v, j) for v, (_, js) in enumerate(combo) for j in js)
        graphs.append(AdmissibleGraph(n, m, usual, dashed))
    return sorted(graphs)


def _distributions(total, parts):
    if parts == 0:
        return [()] if total == 0 else []
    return [c for c in itertools.product(range(total + 1), repeat=parts) if sum(c) == total]


def enumerate_admissible(n, m, k):
    """Every labelled graph with n aerial, m ground vertices and k dashed pairs."""
    usual = 2 * n + m - 2 * k - 2
    if 2 * n + m < 2 or usual < 0 or n < 1 or k < 0:
        raise WeightDimensionError('no admissible graphs for n=%d, m=%d, k=%d' % (n, m, k))
    graphs = set()
    for sizes in _distributions(usual, n):
        for dashes in _distributions(k, n):
            graphs.update(profile_graphs(n, m, tuple(zip(sizes, dashes))))
    return sorted(graphs)


def eta_profile(etas):
    """Profile ((degree, u power), ...) of a list of single-term u-graded elements."""
    out = []
    for eta in etas:
        items = eta.items()
        if len(items) != 1:
            raise DegreeError('graph insertions need single-term elements, got %d terms' % len(items))
        k, gamma = items[0]
        out.append((gamma.degree, k))
    return tuple(out)


def ground_arity(profile):
    """The arity m forced by the dimension count Σ#Star + 2Σk = 2n + m - 2."""
    n = len(profile)
    return sum(s for s, _ in profile) + 2 * sum(k for _, k in profile) - 2 * n + 2


def merge_multiplicity(k1, k2):
    """Number of ways to interleave two blocks of dashed pairs, (k1+k2)!/(k1! k2!)."""
    return comb(k1 + k2, k1)
