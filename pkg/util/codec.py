"""JSON encodings of the algebraic objects.

Rationals are written as "num/den" strings so nothing passes through floats.
Ground vertices of admissible graphs are negative indices -1..-m.
"""
import json
import os
from fractions import Fraction

from algebra.dpoly import PolyDiffOp
from algebra.errors import SchemaError
from algebra.hkr_cyclic import LineGraph
from algebra.polynomial import Polynomial
from algebra.tpoly import PolyVector, UPolyElement, VolumeForm
from formality.graphs import AdmissibleGraph
from formality.stochastic import StochasticOp


def encode_rational(value):
    value = Fraction(value)
    return '%d/%d' % (value.numerator, value.denominator)


def decode_rational(text):
    try:
        return Fraction(text)
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise SchemaError('invalid rational %r' % (text,)) from err


def encode_polynomial(p):
    return {'dim': p.dim,
            'terms': [{'exps': list(exps), 'coeff': encode_rational(c)} for exps, c in p.sorted_terms()]}


def _field(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError('%s is missing the field %r' % (kind, key))
    return obj[key]


def decode_polynomial(obj):
    dim = _field(obj, 'dim', 'polynomial')
    terms = {}
    for term in _field(obj, 'terms', 'polynomial'):
        exps = tuple(_field(term, 'exps', 'monomial'))
        terms[exps] = terms.get(exps, 0) + decode_rational(_field(term, 'coeff', 'monomial'))
    try:
        return Polynomial(dim, terms)
    except ValueError as err:
        raise SchemaError(str(err)) from err


def encode_polyvector(pv):
    return {'dim': pv.dim, 'degree': pv.degree,
            'components': [{'indices': list(key), 'poly': encode_polynomial(p)}
                           for key, p in sorted(pv.components.items())]}


def decode_polyvector(obj):
    dim = _field(obj, 'dim', 'polyvector')
    degree = _field(obj, 'degree', 'polyvector')
    comps = {}
    for comp in _field(obj, 'components', 'polyvector'):
        comps[tuple(_field(comp, 'indices', 'component'))] = decode_polynomial(_field(comp, 'poly', 'component'))
    try:
        return PolyVector(dim, degree, comps)
    except ValueError as err:
        raise SchemaError(str(err)) from err


def encode_u_element(e):
    return {'dim': e.dim, 'u_terms': [{'u': k, 'pv': encode_polyvector(pv)} for k, pv in e.items()]}


def decode_u_element(obj):
    """Accept either a u-graded element or a bare polyvector (read as u^0)."""
    if isinstance(obj, dict) and 'u_terms' not in obj and 'degree' in obj:
        return UPolyElement.single(decode_polyvector(obj))
    dim = _field(obj, 'dim', 'u-graded element')
    pairs = [(_field(t, 'u', 'u-term'), decode_polyvector(_field(t, 'pv', 'u-term')))
             for t in _field(obj, 'u_terms', 'u-graded element')]
    return UPolyElement.from_terms(dim, pairs)


def encode_volume(vol):
    return {'dim': vol.dim, 'log_density': encode_polynomial(vol.log_density)}


def decode_volume(obj, dim=None):
    if obj in (None, 'zero'):
        if dim is None:
            raise SchemaError('the standard volume form needs a dimension')
        return VolumeForm.standard(dim)
    if isinstance(obj, dict) and 'log_density' in obj:
        return VolumeForm(_field(obj, 'dim', 'volume form'), decode_polynomial(obj['log_density']))
    poly = decode_polynomial(obj)
    if dim is not None and poly.dim != dim:
        raise SchemaError('log-density of dimension %d for dimension %d' % (poly.dim, dim))
    return VolumeForm(poly.dim, poly)


def encode_operator(op):
    return {'dim': op.dim, 'arity': op.arity,
            'terms': [{'coeff': encode_polynomial(c), 'slots': [list(a) for a in slots]}
                      for slots, c in sorted(op.terms.items())]}


def decode_operator(obj):
    dim = _field(obj, 'dim', 'operator')
    arity = _field(obj, 'arity', 'operator')
    terms = {}
    for term in _field(obj, 'terms', 'operator'):
        slots = tuple(tuple(a) for a in _field(term, 'slots', 'operator term'))
        coeff = decode_polynomial(_field(term, 'coeff', 'operator term'))
        terms[slots] = terms[slots] + coeff if slots in terms else coeff
    try:
        return PolyDiffOp(dim, arity, terms)
    except ValueError as err:
        raise SchemaError(str(err)) from err


def decode_line_graph(obj):
    return LineGraph(_field(obj, 'ell', 'line graph'), _field(obj, 'k', 'line graph'),
                     tuple(_field(obj, 'endpoints', 'line graph')))


def decode_admissible_graph(obj):
    graph = AdmissibleGraph(_field(obj, 'n', 'graph'), _field(obj, 'm', 'graph'),
                            tuple(tuple(e) for e in _field(obj, 'usual_edges', 'graph')),
                            tuple(tuple(d) for d in obj.get('dashed_pairs', [])))
    try:
        return graph.validate()
    except ValueError as err:
        raise SchemaError(str(err)) from err


def encode_stochastic(op):
    return {'exact': encode_operator(op.exact),
            'parts': [{'graph': graph.as_dict(), 'weight': weight.as_dict(), 'op': encode_operator(part)}
                      for graph, (weight, part) in sorted(op.parts.items())],
            'coefficients': op.as_records()}


def encode_star_product(s):
    return {'dim': s.dim, 'order': s.order,
            'corrections': {str(n + 1): encode_stochastic(op) for n, op in enumerate(s.corrections)}}


def encode_stochastic_list(ops):
    """ħ-keyed residual lists."""
    return {str(n): encode_stochastic(op) for n, op in enumerate(ops)}


def load_json_arg(value):
    """Parse a JSON string or the JSON content of an existing file."""
    if value is None:
        raise SchemaError('missing JSON input')
    text = value
    if os.path.isfile(value):
        with open(value, 'rt') as f:
            text = f.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError('invalid JSON input: %s' % err) from err


def parse_log_density(value, dim):
    """--log-density is either 'zero' or a JSON polynomial / volume form (inline or a path)."""
    if value in (None, '', 'zero'):
        return VolumeForm.standard(dim)
    return decode_volume(load_json_arg(value), dim)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def is_stochastic(value):
    return isinstance(value, StochasticOp)
