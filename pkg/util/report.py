"""Check reports written by the command line tools.

A report is a list of records {name, ok, counterexample?, estimate?, std_error?}
plus the resolved conventions and an echo of the configuration. Identical
configurations give byte-identical JSON unless wall times are requested.
"""
import copy
import os
import time
from functools import lru_cache

from algebra.conventions import resolve_conventions
from .codec import dumps


@lru_cache(maxsize=1)
def _resolved():
    return resolve_conventions()


def conventions():
    """The resolved conventions; measured once per process."""
    return copy.deepcopy(_resolved())


class Report:

    def __init__(self, command, config, timing=False):
        """
        Parameters:
            command (str) -- subcommand or suite that produced the report
            config (dict) -- options echoed into the report
            timing (bool) -- include wall times (makes the output non-reproducible)
        """
        self.command = command
        self.config = dict(config)
        self.timing = timing
        self.records = []
        self.extra = {}
        self._start = time.perf_counter()

    def add(self, name, ok, counterexample=None, estimate=None, std_error=None, **fields):
        record = {'name': name, 'ok': bool(ok)}
        if counterexample is not None:
            record['counterexample'] = counterexample
        if estimate is not None:
            record['estimate'] = estimate
        if std_error is not None:
            record['std_error'] = std_error
        record.update(fields)
        self.records.append(record)
        return record

    def add_statistical(self, name, residual, nsigma=3.0, **fields):
        """Record whether a StochasticOp is consistent with zero; the largest coefficient is the estimate."""
        coefficients = residual.coefficients()
        worst = max(coefficients.values(), key=lambda vs: abs(vs[0]), default=(0.0, 0.0))
        deviation = residual.max_deviation()
        return self.add(name, residual.consistent_with_zero(nsigma), estimate=worst[0], std_error=worst[1],
                        max_sigma=deviation if deviation != float('inf') else 'inf', **fields)

    def merge(self, other):
        self.records.extend(other.records)
        self.extra.update(other.extra)

    @property
    def ok(self):
        return all(r['ok'] for r in self.records)

    @property
    def exit_code(self):
        return 0 if self.ok else 1

    def failures(self):
        return [r for r in self.records if not r['ok']]

    def as_dict(self):
        out = {'command': self.command, 'config': self.config, 'conventions': conventions(),
               'ok': self.ok, 'records': self.records}
        out.update(self.extra)
        if self.timing:
            out['wall_time'] = round(time.perf_counter() - self._start, 3)
        return out

    def to_json(self):
        return dumps(self.as_dict())

    def save(self, path):
        dirname = os.path.dirname(path)
        if dirname:
            os.makedirs(dirname, exist_ok=True)
        with open(path, 'wt') as f:
            f.write(self.to_json())
            f.write('\n')
