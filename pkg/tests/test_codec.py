import json
from fractions import Fraction

import pytest

from algebra.dpoly import hkr
from algebra.errors import SchemaError
from algebra.polynomial import Polynomial
from algebra.tpoly import UPolyElement, VolumeForm, coordinate_field
from formality.graphs import AdmissibleGraph
from util import codec
from .strategies import x


def test_rationals():
    assert codec.encode_rational(Fraction(1, 2)) == '1/2'
    assert codec.encode_rational(3) == '3/1'
    assert codec.decode_rational('-2/6') == Fraction(-1, 3)
    for bad in ('1/0', 'half', None):
        with pytest.raises(SchemaError):
            codec.decode_rational(bad)


def test_polynomial_layout():
    p = Polynomial(2, {(1, 0): '1/2', (0, 0): 3})
    assert codec.encode_polynomial(p) == {'dim': 2, 'terms': [{'exps': [0, 0], 'coeff': '3/1'},
                                                              {'exps': [1, 0], 'coeff': '1/2'}]}
    assert codec.decode_polynomial(codec.encode_polynomial(p)) == p


def test_schema_errors():
    with pytest.raises(SchemaError):
        codec.decode_polynomial({'dim': 2})
    with pytest.raises(SchemaError):
        codec.decode_polynomial({'dim': 2, 'terms': [{'exps': [1], 'coeff': '1/1'}]})
    with pytest.raises(SchemaError):
        codec.decode_polyvector({'dim': 2, 'degree': 1, 'components': [{'indices': [0, 1], 'poly': {'dim': 2, 'terms': []}}]})
    with pytest.raises(SchemaError):
        codec.decode_admissible_graph({'n': 1, 'm': 1, 'usual_edges': [[0, 0]]})
    with pytest.raises(SchemaError):
        codec.load_json_arg('{not json')
    with pytest.raises(SchemaError):
        codec.load_json_arg(None)


def test_u_elements():
    pv = coordinate_field(2, (0, 1), x(2, 0))
    bare = codec.decode_u_element(codec.encode_polyvector(pv))
    assert bare == UPolyElement.single(pv)
    graded = UPolyElement.single(pv, 2)
    assert codec.decode_u_element(codec.encode_u_element(graded)) == graded


def test_operators():
    op = hkr(coordinate_field(2, (0, 1), x(2, 1)))
    obj = codec.encode_operator(op)
    assert obj['arity'] == 2 and len(obj['terms']) == 2
    assert codec.decode_operator(json.loads(codec.dumps(obj))) == op


def test_graphs():
    obj = {'n': 1, 'm': 2, 'usual_edges': [[0, -1], [0, -2]]}
    graph = codec.decode_admissible_graph(obj)
    assert graph == AdmissibleGraph(1, 2, ((0, -1), (0, -2)), ())
    assert graph.as_dict() == dict(obj, dashed_pairs=[])
    assert codec.decode_line_graph({'ell': 1, 'k': 1, 'endpoints': [3]}).free_runs() == [(1, 2)]


def test_log_density(tmp_path):
    assert codec.parse_log_density('zero', 2) == VolumeForm.standard(2)
    text = json.dumps(codec.encode_polynomial(x(2, 0)))
    assert codec.parse_log_density(text, 2) == VolumeForm(2, x(2, 0))
    path = tmp_path / 'phi.json'
    path.write_text(text)
    assert codec.parse_log_density(str(path), 2) == VolumeForm(2, x(2, 0))
    with pytest.raises(SchemaError):
        codec.parse_log_density(text, 3)


def test_dumps_is_canonical():
    assert codec.dumps({'b': 1, 'a': [1, 2]}) == codec.dumps({'a': [1, 2], 'b': 1})
