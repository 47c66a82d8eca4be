import json
import logging
import os
from fractions import Fraction

import pytest

import run
from algebra.dpoly import PolyDiffOp
from algebra.polynomial import Polynomial
from suites import SUITE_NAMES, find_suite_using_name
from suites.base_suite import BaseSuite
from util import codec

X_D_X = {'dim': 1, 'degree': 1,
         'components': [{'indices': [0], 'poly': {'dim': 1, 'terms': [{'exps': [1], 'coeff': '1/1'}]}}]}
D_X_D_Y = {'dim': 2, 'degree': 2,
           'components': [{'indices': [0, 1], 'poly': {'dim': 2, 'terms': [{'exps': [0, 0], 'coeff': '1/1'}]}}]}
X_D_X_D_Y = {'dim': 2, 'degree': 2,
             'components': [{'indices': [0, 1], 'poly': {'dim': 2, 'terms': [{'exps': [1, 0], 'coeff': '1/1'}]}}]}


@pytest.fixture(autouse=True)
def reset_loggers():
    yield
    for name in ('formality', 'algebra', 'quantize', 'suites'):
        logger = logging.getLogger(name)
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()


def invoke(capsys, tmp_path, *argv):
    code = run.main(list(argv) + ['--results-dir', str(tmp_path)])
    return code, capsys.readouterr().out


def test_usage_errors(capsys, tmp_path):
    assert run.main([]) == 2
    assert run.main(['bogus']) == 2
    assert invoke(capsys, tmp_path, 'verify', '--suite', 'nope')[0] == 2
    assert invoke(capsys, tmp_path, 'verify', '--trials', '0')[0] == 2
    assert invoke(capsys, tmp_path, 'hkr-cycl')[0] == 2
    assert invoke(capsys, tmp_path, 'star', '--poisson', json.dumps(D_X_D_Y), '--checks', 'assoc,nope')[0] == 2


def test_input_errors(capsys, tmp_path):
    assert invoke(capsys, tmp_path, 'hkr-cycl', '--input', '{"dim": 1}')[0] == 2
    assert invoke(capsys, tmp_path, 'hkr-cycl', '--input', '{broken')[0] == 2
    assert invoke(capsys, tmp_path, 'linf', '--etas', '{}', '--m', '2')[0] == 2


def test_hkr_cycl(capsys, tmp_path):
    code, out = invoke(capsys, tmp_path, 'hkr-cycl', '--input', json.dumps(X_D_X))
    assert code == 0
    data = json.loads(out)
    [entry] = data['operators']
    assert entry['u'] == 0 and entry['degree'] == 1
    expected = PolyDiffOp(1, 1, {((1,),): Polynomial.variable(1, 0),
                                 ((0,),): Polynomial.constant(1, Fraction(1, 2))})
    assert codec.decode_operator(entry['operator']) == expected
    assert os.path.isfile(os.path.join(str(tmp_path), 'experiment_name', 'hkr_cycl_opt.txt'))


def test_hkr_cycl_with_u_power(capsys, tmp_path):
    one = {'dim': 1, 'degree': 0, 'components': [{'indices': [], 'poly': {'dim': 1, 'terms': [{'exps': [0], 'coeff': '1/1'}]}}]}
    code, out = invoke(capsys, tmp_path, 'hkr-cycl', '--input', json.dumps(one), '--u-power', '1')
    assert code == 0
    [entry] = json.loads(out)['operators']
    assert entry['u'] == 1
    op = codec.decode_operator(entry['operator'])
    assert op.terms == {((0,), (0,)): Polynomial.constant(1, Fraction(1, 2))}


def test_verify_is_reproducible(capsys, tmp_path):
    outputs = []
    for run_id in range(2):
        path = os.path.join(str(tmp_path), 'report_%d.json' % run_id)
        code, _ = invoke(capsys, tmp_path, 'verify', '--suite', 'bicomplex', '--dim', '1', '--trials', '3',
                         '--max-arity', '2', '--seed', '7', '--out', path)
        assert code == 0
        with open(path) as f:
            outputs.append(f.read())
    assert outputs[0] == outputs[1]
    report = json.loads(outputs[0])
    assert report['command'] == 'verify:bicomplex'
    assert report['ok'] and all(r['ok'] for r in report['records'])
    assert len(report['seeds']) == 3
    assert 'sigma_defect_ratio' in report['conventions']
    assert os.path.isfile(os.path.join(str(tmp_path), 'experiment_name', 'verify_log.txt'))


def test_verify_html(capsys, tmp_path):
    code, _ = invoke(capsys, tmp_path, 'verify', '--suite', 'bicomplex', '--dim', '1', '--trials', '2',
                     '--max-arity', '1', '--html')
    assert code == 0
    assert os.path.isfile(os.path.join(str(tmp_path), 'experiment_name', 'web', 'index.html'))


def test_star_rejects_a_divergent_bivector(capsys, tmp_path):
    code, out = invoke(capsys, tmp_path, 'star', '--poisson', json.dumps(X_D_X_D_Y))
    assert code == 1
    report = json.loads(out)
    assert report['records'][0]['name'] == 'poisson_input' and not report['ok']


def test_star_first_order(capsys, tmp_path):
    code, out = invoke(capsys, tmp_path, 'star', '--poisson', json.dumps(D_X_D_Y), '--order', '1')
    assert code == 0
    report = json.loads(out)
    names = {r['name'] for r in report['records']}
    assert names == {'poisson_input', 'associativity', 'cyclicity', 'trace'}
    assert report['star_product']['order'] == 1


def test_weights(capsys, tmp_path):
    graph = {'n': 1, 'm': 1, 'usual_edges': [[0, -1]]}
    code, out = invoke(capsys, tmp_path, 'weights', '--graph', json.dumps(graph), '--samples', '500')
    assert code == 0
    assert json.loads(out)['weight']['value'] == pytest.approx(1.0)


def test_linf_first_order(capsys, tmp_path):
    code, out = invoke(capsys, tmp_path, 'linf', '--n', '1', '--m', '2', '--etas', json.dumps([D_X_D_Y]))
    assert code == 0
    assert json.loads(out)['records'][0]['name'] == 'linf_residual'


@pytest.mark.parametrize('name', SUITE_NAMES)
def test_every_suite_is_registered(name):
    suite = find_suite_using_name(name)
    assert issubclass(suite, BaseSuite)
