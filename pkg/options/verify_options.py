import suites
from .base_options import BaseOptions


class VerifyOptions(BaseOptions):
    """This class includes options of the `verify` subcommand.

    It also includes shared options defined in BaseOptions, and gathers the
    options of the selected suite.
    """

    command = 'verify'

    def initialize(self, parser):
        parser = BaseOptions.initialize(self, parser)  # define shared options
        parser.add_argument('--suite', type=str, default='algebra', choices=suites.SUITE_NAMES, help='which verification suite to run')
        parser.add_argument('--trials', type=int, default=20, help='# random instances per check')
        parser.add_argument('--samples', type=int, default=200000, help='# Monte Carlo samples per graph weight (Monte Carlo suites only)')
        parser.add_argument('--max-degree', type=int, default=3, help='maximal wedge degree of random polyvectors (capped at --dim)')
        parser.add_argument('--max-arity', type=int, default=3, help='maximal arity of random operators')
        parser.add_argument('--max-u', type=int, default=2, help='maximal power of u in random u-graded elements')
        parser.add_argument('--max-order', type=int, default=2, help='maximal derivative order per slot of random operators')
        parser.add_argument('--nsigma', type=float, default=3.0, help='tolerance of statistical checks in propagated standard errors')
        return parser

    def modify_options(self, parser, opt):
        suite_option_setter = suites.get_option_setter(opt.suite)
        return suite_option_setter(parser)

    def check_options(self, parser, opt):
        BaseOptions.check_options(self, parser, opt)
        for flag in ('trials', 'samples', 'max_arity'):
            if getattr(opt, flag) < 1:
                parser.error('--%s must be positive' % flag.replace('_', '-'))
        for flag in ('max_degree', 'max_u', 'max_order'):
            if getattr(opt, flag) < 0:
                parser.error('--%s must be non-negative' % flag.replace('_', '-'))
