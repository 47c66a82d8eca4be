# Simple script to make sure basic usage
# such as every verification suite and every subcommand
# runs without errors.
import json
import os
import sys

PYTHON = sys.executable or 'python'


def run(command):
    print(command)
    exit_status = os.system(command)
    if exit_status > 0:
        exit(1)


def quoted(obj):
    return "'%s'" % json.dumps(obj)


if __name__ == '__main__':
    results = '--results-dir ./results/test_before_push'

    # exact suites at small sizes
    run('%s run.py verify --suite algebra --dim 2 --trials 5 --seed 1 %s' % (PYTHON, results))
    run('%s run.py verify --suite hochschild --dim 2 --trials 4 --max-arity 2 --seed 1 %s' % (PYTHON, results))
    run('%s run.py verify --suite cyclic --dim 2 --trials 4 --max-arity 2 --seed 1 %s' % (PYTHON, results))
    run('%s run.py verify --suite bicomplex --dim 2 --trials 4 --max-arity 2 --seed 7 %s' % (PYTHON, results))
    run('%s run.py verify --suite hkr --dim 2 --trials 2 --max-graph-size 4 --seed 1 %s' % (PYTHON, results))
    run('%s run.py verify --suite chainmap --dim 2 --trials 6 --max-u 1 --seed 1 %s' % (PYTHON, results))

    # same chain map check with a non-trivial volume form
    log_density = {'dim': 2, 'terms': [{'exps': [1, 1], 'coeff': '1/2'}]}
    run('%s run.py verify --suite chainmap --dim 2 --trials 4 --max-u 1 --seed 2 --log-density %s %s'
        % (PYTHON, quoted(log_density), results))

    # Monte Carlo suites with few samples; only the exit status of the exact checks matters here
    run('%s run.py verify --suite star --order 1 --trials 1 --samples 2000 --seed 3 %s' % (PYTHON, results))

    # map subcommands
    xi = {'dim': 1, 'degree': 1, 'components': [{'indices': [0], 'poly': {'dim': 1, 'terms': [{'exps': [1], 'coeff': '1/1'}]}}]}
    run('%s run.py hkr-cycl --input %s %s' % (PYTHON, quoted(xi), results))
    run('%s run.py hkr-cycl --input %s --u-power 1 %s' % (PYTHON, quoted(xi), results))
    graph = {'n': 1, 'm': 1, 'usual_edges': [[0, -1]], 'dashed_pairs': []}
    run('%s run.py weights --graph %s --samples 1000 %s' % (PYTHON, quoted(graph), results))
    poisson = {'dim': 2, 'degree': 2, 'components': [{'indices': [0, 1], 'poly': {'dim': 2, 'terms': [{'exps': [0, 0], 'coeff': '1/1'}]}}]}
    run('%s run.py star --poisson %s --order 1 --checks assoc,cyclic,trace %s' % (PYTHON, quoted(poisson), results))
    run('%s run.py linf --n 1 --m 2 --etas %s %s' % (PYTHON, quoted([poisson]), results))
