"""Options of the subcommands that apply a single map: hkr-cycl, weights, star and linf."""
from .base_options import BaseOptions


class HkrCyclOptions(BaseOptions):
    """Options of `hkr-cycl`: apply the cyclic HKR map to a JSON polyvector."""

    command = 'hkr-cycl'

    def initialize(self, parser):
        parser = BaseOptions.initialize(self, parser)
        parser.add_argument('--input', type=str, required=True, help='polyvector or u-graded element as JSON (inline or a path)')
        parser.add_argument('--u-power', type=int, default=None, help='read a bare polyvector input as input (x) u^k; ignored for u-graded inputs')
        parser.add_argument('--literal-graphs', action='store_true', help='only constrain gaps between consecutive endpoints of line graphs')
        return parser

    def check_options(self, parser, opt):
        BaseOptions.check_options(self, parser, opt)
        if opt.u_power is not None and opt.u_power < 0:
            parser.error('--u-power must be non-negative')


class WeightsOptions(BaseOptions):
    """Options of `weights`: Monte Carlo weight of one admissible graph."""

    command = 'weights'

    def initialize(self, parser):
        parser = BaseOptions.initialize(self, parser)
        parser.add_argument('--graph', type=str, required=True, help='admissible graph as JSON (inline or a path)')
        parser.add_argument('--samples', type=int, default=200000, help='# Monte Carlo samples')
        return parser

    def check_options(self, parser, opt):
        BaseOptions.check_options(self, parser, opt)
        if opt.samples < 1:
            parser.error('--samples must be positive')


class StarOptions(BaseOptions):
    """Options of `star`: build the star product of a Poisson bivector and check it."""

    command = 'star'
    CHECKS = ('assoc', 'cyclic', 'trace')

    def initialize(self, parser):
        parser = BaseOptions.initialize(self, parser)
        parser.add_argument('--poisson', type=str, required=True, help='bivector as JSON (inline or a path)')
        parser.add_argument('--order', type=int, default=1, help='truncation order N of the star product (1 or 2)')
        parser.add_argument('--samples', type=int, default=200000, help='# Monte Carlo samples per order-2 graph weight')
        parser.add_argument('--checks', type=str, default='assoc,cyclic,trace', help='comma separated residual checks [assoc | cyclic | trace]')
        parser.add_argument('--nsigma', type=float, default=3.0, help='tolerance of statistical checks in propagated standard errors')
        return parser

    def check_options(self, parser, opt):
        BaseOptions.check_options(self, parser, opt)
        if opt.order < 0:
            parser.error('--order must be non-negative')
        if opt.samples < 1:
            parser.error('--samples must be positive')
        checks = [c for c in opt.checks.split(',') if c]
        unknown = [c for c in checks if c not in self.CHECKS]
        if unknown:
            parser.error('unknown checks: %s' % ', '.join(unknown))
        opt.checks = ','.join(checks)


class LinfOptions(BaseOptions):
    """Options of `linf`: the L-infinity residual at one or two insertions."""

    command = 'linf'

    def initialize(self, parser):
        parser = BaseOptions.initialize(self, parser)
        parser.add_argument('--n', type=int, default=1, choices=[1, 2], help='number of insertions')
        parser.add_argument('--etas', type=str, required=True, help='JSON list of u-graded elements (inline or a path)')
        parser.add_argument('--m', type=int, required=True, help='arity of the component; the residual acts on m + 1 arguments')
        parser.add_argument('--mode', type=str, default='exact', choices=['exact', 'mc'], help='exact is available for n = 1 only')
        parser.add_argument('--samples', type=int, default=100000, help='# Monte Carlo samples per graph weight')
        parser.add_argument('--no-project', action='store_true', help='use the non-cyclic components instead of their cyclic projections')
        parser.add_argument('--nsigma', type=float, default=3.0, help='tolerance of statistical checks in propagated standard errors')
        return parser

    def check_options(self, parser, opt):
        BaseOptions.check_options(self, parser, opt)
        if opt.m < 0:
            parser.error('--m must be non-negative')
        if opt.samples < 1:
            parser.error('--samples must be positive')
