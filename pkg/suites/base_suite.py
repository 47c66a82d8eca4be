import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor

from options.base_options import config_echo
from util.codec import encode_operator, parse_log_density
from util.report import Report
from util.util import trial_seeds

logger = logging.getLogger(__name__)


class BaseSuite(ABC):
    """This class is an abstract base class (ABC) for verification suites.
    To create a subclass, you need to implement the following functions:
        -- <run_checks>:                    run the checks; every check adds one record to self.report.
        -- <modify_commandline_options>:    (optionally) add suite-specific options and set default options.
    """

    def __init__(self, opt):
        """Initialize the BaseSuite class.

        Parameters:
            opt (Option class)-- stores all the experiment flags; needs to be a subclass of BaseOptions

        The volume form comes from --log-density and every trial draws its inputs
        from its own seed, derived from --seed.
        """
        self.opt = opt
        self.dim = opt.dim
        self.vol = parse_log_density(opt.log_density, opt.dim)
        self.seeds = trial_seeds(opt.seed, opt.trials)
        self.report = Report('verify:%s' % opt.suite, config_echo(opt), timing=opt.timing)
        self.report.extra['seeds'] = self.seeds

    @staticmethod
    def modify_commandline_options(parser):
        """Add new suite-specific options, and rewrite default values for existing options.

        Parameters:
            parser          -- original option parser

        Returns:
            the modified parser.
        """
        return parser

    @abstractmethod
    def run_checks(self):
        """Run every check of the suite."""
        pass

    def run(self):
        self.run_checks()
        failed = self.report.failures()
        logger.info('%s: %d checks, %d failed', self.report.command, len(self.report.records), len(failed))
        for rec in failed:
            logger.warning('check failed: %s', rec['name'])
        return self.report

    def map_trials(self, fn):
        """fn(trial, seed) -> list of records, run on --workers threads; records keep trial order."""
        trials = list(enumerate(self.seeds))
        if self.opt.workers == 1:
            results = [fn(t, s) for t, s in trials]
        else:
            with ThreadPoolExecutor(max_workers=self.opt.workers) as pool:
                results = list(pool.map(lambda ts: fn(*ts), trials))
        for records in results:
            for rec in records:
                self.report.add(**rec)

    def check(self, name, ok, **fields):
        return self.report.add(name, ok, **fields)

    def check_zero(self, name, op, **fields):
        """One record asserting that an exact operator vanishes."""
        ok = op.is_zero()
        if not ok:
            fields['counterexample'] = encode_operator(op)
        return self.report.add(name, ok, **fields)

    def check_statistical(self, name, residual, nsigma=None, **fields):
        """One record asserting that a StochasticOp is consistent with zero."""
        nsigma = self.opt.nsigma if nsigma is None else nsigma
        out = self.report.add_statistical(name, residual, nsigma, **fields)
        deviation = residual.max_deviation()
        if deviation > 5:
            logger.warning('%s: residual at %.1f sigma; evidence against the implemented conventions', name, deviation)
        return out


def record(name, ok, **fields):
    """A record dict for <BaseSuite.map_trials>."""
    out = {'name': name, 'ok': bool(ok)}
    out.update(fields)
    return out


def zero_record(name, op, **fields):
    if op.is_zero():
        return record(name, True, **fields)
    return record(name, False, counterexample=encode_operator(op), **fields)
