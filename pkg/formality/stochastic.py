"""Operators with Monte Carlo coefficients.

A StochasticOp is an exact PolyDiffOp plus, for every graph that contributed,
the graph's WeightEstimate and the exact operator it multiplies. Linear maps act
on every part, so a residual built from linear maps keeps one error bar per
coefficient. Weights of different graphs are treated as independent.
"""
import math

from algebra.dpoly import PolyDiffOp
from algebra.errors import ArityError


class StochasticOp:

    def __init__(self, exact, parts=None):
        """
        Parameters:
            exact (PolyDiffOp) -- the part known exactly
            parts (dict)       -- graph key -> (WeightEstimate, PolyDiffOp)
        """
        self.exact = exact
        self.parts = {}
        for key, (weight, op) in (parts or {}).items():
            if op.arity != exact.arity:
                raise ArityError('part of arity %d in an arity %d operator' % (op.arity, exact.arity))
            if not op.is_zero() and (weight.value != 0.0 or weight.std_error):
                self.parts[key] = (weight, op)

    @classmethod
    def exact_op(cls, op):
        return cls(op)

    @property
    def dim(self):
        return self.exact.dim

    @property
    def arity(self):
        return self.exact.arity

    def is_exact(self):
        return not self.parts

    def map(self, fn):
        """Apply a linear map PolyDiffOp -> PolyDiffOp to every part."""
        exact = fn(self.exact)
        return StochasticOp(exact, {key: (w, fn(op)) for key, (w, op) in self.parts.items()})

    def __add__(self, other):
        if isinstance(other, PolyDiffOp):
            other = StochasticOp(other)
        parts = dict(self.parts)
        for key, (w, op) in other.parts.items():
            if key in parts:
                parts[key] = (w, parts[key][1] + op)
            else:
                parts[key] = (w, op)
        return StochasticOp(self.exact + other.exact, parts)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, PolyDiffOp):
            other = StochasticOp(other)
        return self + (-other)

    def scale(self, factor):
        return self.map(lambda op: op.scale(factor))

    def coefficients(self):
        """(slots, exponents) -> (value, std_error) over all monomial coefficients."""
        values = {}
        variances = {}
        for slots, poly in self.exact.terms.items():
            for exps, coeff in poly.terms.items():
                values[(slots, exps)] = float(coeff)
        for weight, op in self.parts.values():
            for slots, poly in op.terms.items():
                for exps, coeff in poly.terms.items():
                    key = (slots, exps)
                    c = float(coeff)
                    values[key] = values.get(key, 0.0) + weight.value * c
                    variances[key] = variances.get(key, 0.0) + (weight.std_error * c) ** 2
        return {key: (value, math.sqrt(variances.get(key, 0.0))) for key, value in values.items()}

    def max_deviation(self):
        """Largest |value| / std_error over the coefficients, inf for nonzero exact ones."""
        worst = 0.0
        for value, std in self.coefficients().values():
            if abs(value) <= 1e-9:
                continue
            worst = max(worst, abs(value) / std if std else math.inf)
        return worst

    def consistent_with_zero(self, nsigma=3.0, atol=1e-9):
        return all(abs(value) <= nsigma * std + atol for value, std in self.coefficients().values())

    def as_records(self):
        """Sorted coefficient records for reports."""
        out = []
        for (slots, exps), (value, std) in sorted(self.coefficients().items()):
            out.append({'slots': [list(a) for a in slots], 'exps': list(exps),
                        'value': value, 'std_error': std})
        return out
