"""General-purpose entry point of the cyclic formality engine.

The first argument selects a subcommand; every subcommand has its own options class
(see options/), all sharing the flags of BaseOptions (--seed, --dim, --log-density, ...).

    verify    run a verification suite (algebra | hochschild | cyclic | bicomplex | hkr |
              chainmap | weights-n1 | linf-n2 | star) and print its JSON report
    hkr-cycl  apply the cyclic HKR map to a polyvector or u-graded element
    weights   estimate the weight of one admissible graph by Monte Carlo
    star      build the star product of a divergence-free Poisson bivector and check it
    linf      evaluate the L-infinity relation at one or two insertions

JSON goes to stdout (or --out); logs go to stderr and to <results-dir>/<name>/.
Exit status: 0 when every check passed, 1 when a check failed, 2 on usage or input errors.

Example:
    python run.py verify --suite bicomplex --dim 2 --trials 20 --seed 7
    python run.py verify --suite weights-n1 --samples 200000 --seed 3
    python run.py hkr-cycl --input '{"dim": 1, "degree": 1, "components": [{"indices": [0], "poly": {"dim": 1, "terms": [{"exps": [1], "coeff": "1/1"}]}}]}'
    python run.py star --poisson poisson.json --order 2 --checks assoc,cyclic,trace

See options/base_options.py and the subcommand options for more flags.
"""
import logging
import os
import sys

from algebra.errors import FormalityError, NotPoissonError, SchemaError
from algebra.hkr_cyclic import cyclic_hkr
from algebra.tpoly import UPolyElement
from formality.taylor import linf_residual
from formality.weights import weight_mc
from options.base_options import config_echo
from options.map_options import HkrCyclOptions, LinfOptions, StarOptions, WeightsOptions
from options.verify_options import VerifyOptions
from quantize.star_product import (associativity_residual, cyclicity_residual, mc_series, trace_residual)
from suites import create_suite
from util import codec
from util.html import save_report_html
from util.report import Report

logger = logging.getLogger('formality')

COMMANDS = {
    'verify': VerifyOptions,
    'hkr-cycl': HkrCyclOptions,
    'weights': WeightsOptions,
    'star': StarOptions,
    'linf': LinfOptions,
}


def cmd_verify(opt):
    suite = create_suite(opt)
    return suite.run()


def cmd_hkr_cycl(opt):
    element = codec.decode_u_element(codec.load_json_arg(opt.input))
    if opt.u_power is not None and all(k == 0 for k, _ in element.items()):
        element = UPolyElement.from_terms(element.dim, [(opt.u_power, pv) for _, pv in element.items()])
    vol = codec.parse_log_density(opt.log_density, element.dim)
    ops = cyclic_hkr(element, vol, boundary_parity=not opt.literal_graphs)
    return {'input': codec.encode_u_element(element), 'volume': codec.encode_volume(vol),
            'operators': [{'u': k, 'degree': pv.degree, 'operator': codec.encode_operator(op)}
                          for (k, pv), op in zip(element.items(), ops)]}


def cmd_weights(opt):
    graph = codec.decode_admissible_graph(codec.load_json_arg(opt.graph))
    estimate = weight_mc(graph, opt.samples, opt.seed, opt.workers)
    return {'graph': graph.as_dict(), 'weight': estimate.as_dict()}


def cmd_star(opt):
    report = Report('star', config_echo(opt), timing=opt.timing)
    poisson = codec.decode_polyvector(codec.load_json_arg(opt.poisson))
    vol = codec.parse_log_density(opt.log_density, poisson.dim)
    try:
        series = mc_series(poisson, vol, opt.order, opt.samples, opt.seed, opt.workers)
    except NotPoissonError as err:
        report.add('poisson_input', False, counterexample=str(err))
        return report
    report.add('poisson_input', True)
    report.extra['star_product'] = codec.encode_star_product(series)
    checks = opt.checks.split(',') if opt.checks else []
    if 'assoc' in checks:
        for n, residual in enumerate(associativity_residual(series)):
            report.add_statistical('associativity', residual, opt.nsigma, order=n)
    if 'cyclic' in checks:
        for n, residual in enumerate(cyclicity_residual(series, vol)):
            report.add_statistical('cyclicity', residual, opt.nsigma, order=n)
    if 'trace' in checks:
        for n, residual in enumerate(trace_residual(series, vol)):
            report.add_statistical('trace', residual, opt.nsigma, order=n)
    return report


def cmd_linf(opt):
    report = Report('linf', config_echo(opt), timing=opt.timing)
    data = codec.load_json_arg(opt.etas)
    if not isinstance(data, list):
        raise SchemaError('--etas expects a JSON list of u-graded elements')
    etas = [codec.decode_u_element(obj) for obj in data]
    if not etas:
        raise SchemaError('--etas is empty')
    vol = codec.parse_log_density(opt.log_density, etas[0].dim)
    residual = linf_residual(opt.n, etas, opt.m, vol, mode=opt.mode, samples=opt.samples, seed=opt.seed,
                             workers=opt.workers, project=not opt.no_project)
    report.add_statistical('linf_residual', residual, opt.nsigma, n=opt.n, m=opt.m)
    report.extra['residual'] = codec.encode_stochastic(residual)
    return report


HANDLERS = {
    'verify': cmd_verify,
    'hkr-cycl': cmd_hkr_cycl,
    'weights': cmd_weights,
    'star': cmd_star,
    'linf': cmd_linf,
}


def _emit(text, opt):
    if opt.out:
        dirname = os.path.dirname(opt.out)
        if dirname:
            os.makedirs(dirname, exist_ok=True)
        with open(opt.out, 'wt') as f:
            f.write(text + '\n')
    else:
        sys.stdout.write(text + '\n')


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] not in COMMANDS:
        sys.stderr.write('usage: run.py {%s} [options]\n' % ','.join(COMMANDS))
        return 0 if argv and argv[0] in ('-h', '--help') else 2

    command = argv[0]
    try:
        opt = COMMANDS[command]().parse(argv[1:])  # get options
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2

    try:
        result = HANDLERS[command](opt)
    except SchemaError as err:
        logger.error('invalid input: %s', err)
        return 2
    except FormalityError as err:
        logger.error('%s: %s', type(err).__name__, err)
        return 2

    if isinstance(result, Report):
        _emit(result.to_json(), opt)
        if opt.html:
            web_dir = os.path.join(opt.results_dir, opt.name, 'web')
            logger.info('report page saved to %s', save_report_html(result, web_dir))
        return result.exit_code
    _emit(codec.dumps(result), opt)
    return 0


if __name__ == '__main__':
    sys.exit(main())
