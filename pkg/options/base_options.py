import argparse
import os

from util import util
from util.logger import configure_packages, setup_logger

# flags that only decide where output goes; left out of the report's config echo
OUTPUT_FLAGS = ('out', 'results_dir', 'html', 'verbose', 'timing', 'name')


class BaseOptions():
    """This class defines options shared by every subcommand.

    It also implements several helper functions such as parsing, printing, and saving the options.
    Subclasses add their own flags in <initialize> and may let other components (the
    verification suites) rewrite defaults in <modify_options>.
    """

    command = None

    def __init__(self):
        """Reset the class; indicates the class hasn't been initailized"""
        self.initialized = False

    def initialize(self, parser):
        """Define the common options that are used by every subcommand."""
        # basic parameters
        parser.add_argument('--seed', type=int, default=0, help='master seed; every random input and Monte Carlo stream derives from it')
        parser.add_argument('--dim', type=int, default=2, help='dimension d of the ambient space R^d')
        parser.add_argument('--log-density', type=str, default='zero', help='log-density phi of the volume form e^phi dx: "zero" or a JSON polynomial (inline or a path)')
        parser.add_argument('--max-poly-degree', type=int, default=2, help='maximal degree of random polynomial coefficients')
        parser.add_argument('--workers', type=int, default=1, help='# worker threads for trials and Monte Carlo sampling')
        # output parameters
        parser.add_argument('--out', type=str, default='', help='write the JSON output here instead of stdout')
        parser.add_argument('--name', type=str, default='experiment_name', help='name of the experiment. It decides where to store logs and options')
        parser.add_argument('--results-dir', type=str, default='./results', help='logs and option dumps are saved here')
        parser.add_argument('--timing', action='store_true', help='include wall times in reports (breaks byte-identical output)')
        parser.add_argument('--verbose', action='store_true', help='if specified, print more debugging information')
        parser.add_argument('--html', action='store_true', help='also render the report as <results-dir>/<name>/web/index.html')
        self.initialized = True
        return parser

    def modify_options(self, parser, opt):
        """Hook for option setters that depend on already parsed values."""
        return parser

    def check_options(self, parser, opt):
        """Reject out-of-range values; parser.error exits with status 2."""
        if opt.dim < 1:
            parser.error('--dim must be positive')
        if opt.workers < 1:
            parser.error('--workers must be positive')
        if opt.max_poly_degree < 0:
            parser.error('--max-poly-degree must be non-negative')

    def gather_options(self, argv=None):
        """Initialize our parser with basic options(only once).
        Add additional options defined in <modify_options>, e.g. the ones a
        verification suite contributes through its <modify_commandline_options>.
        """
        parser = argparse.ArgumentParser(prog='run.py %s' % self.command,
                                         formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        parser = self.initialize(parser)

        # get the basic options
        opt, _ = parser.parse_known_args(argv)

        # modify component-related parser options
        parser = self.modify_options(parser, opt)

        # save and return the parser
        self.parser = parser
        opt = parser.parse_args(argv)
        self.check_options(parser, opt)
        return opt

    def print_options(self, opt, logger):
        """Log and save options

        It will log both current options and default values(if different).
        It will save options into a text file / [results_dir] / [name] / [command]_opt.txt
        """
        message = ''
        message += '----------------- Options ---------------\n'
        for k, v in sorted(vars(opt).items()):
            comment = ''
            default = self.parser.get_default(k)
            if v != default:
                comment = '\t[default: %s]' % str(default)
            message += '{:>25}: {:<30}{}\n'.format(str(k), str(v), comment)
        message += '----------------- End -------------------'
        logger.info('\n' + message)

        # save to the disk
        expr_dir = os.path.join(opt.results_dir, opt.name)
        util.mkdirs(expr_dir)
        file_name = os.path.join(expr_dir, '{}_opt.txt'.format(opt.command.replace('-', '_')))
        with open(file_name, 'wt') as opt_file:
            opt_file.write(message)
            opt_file.write('\n')

    def parse(self, argv=None):
        """Parse our options, set up the logger and seed the global generators."""
        opt = self.gather_options(argv)
        opt.command = self.command

        expr_dir = os.path.join(opt.results_dir, opt.name)
        logger = setup_logger(expr_dir, '{}_log.txt'.format(opt.command.replace('-', '_')),
                              'formality', verbose=opt.verbose)
        configure_packages(logger)
        self.print_options(opt, logger)
        util.set_seed(opt.seed)

        self.opt = opt
        return self.opt


def config_echo(opt):
    """The options that determine a report's content."""
    return {k: v for k, v in sorted(vars(opt).items()) if k not in OUTPUT_FLAGS}
