"""This package contains the verification suites run by `run.py verify`.

To add a custom suite called 'dummy', you need to add a file called 'dummy_suite.py' and define a subclass DummySuite inherited from BaseSuite.
You need to implement the following functions:
    -- <run_checks>:                    run the checks and add records through <check>, <check_zero> or <check_statistical>.
    -- <modify_commandline_options>:    (optionally) add suite-specific options and set default options.

Now you can use the suite by specifying flag '--suite dummy'. Dashes in suite names map to underscores
in file names, so '--suite weights-n1' loads 'weights_n1_suite.py'.
"""

import importlib
import logging

from suites.base_suite import BaseSuite

SUITE_NAMES = ['algebra', 'hochschild', 'cyclic', 'bicomplex', 'hkr', 'chainmap', 'weights-n1', 'linf-n2', 'star']

logger = logging.getLogger(__name__)


def find_suite_using_name(suite_name):
    """Import the module "suites/[suite_name]_suite.py".

    In the file, the class called SuiteNameSuite() will
    be instantiated. It has to be a subclass of BaseSuite,
    and it is case-insensitive.
    """
    suite_filename = "suites." + suite_name.replace('-', '_') + "_suite"
    suitelib = importlib.import_module(suite_filename)
    suite = None
    target_suite_name = suite_name.replace('-', '').replace('_', '') + 'suite'
    for name, cls in suitelib.__dict__.items():
        if name.lower() == target_suite_name.lower() \
           and isinstance(cls, type) and issubclass(cls, BaseSuite):
            suite = cls

    if suite is None:
        raise ValueError("In %s.py, there should be a subclass of BaseSuite with class name that matches %s in lowercase."
                         % (suite_filename, target_suite_name))

    return suite


def get_option_setter(suite_name):
    """Return the static method <modify_commandline_options> of the suite class."""
    suite_class = find_suite_using_name(suite_name)
    return suite_class.modify_commandline_options


def create_suite(opt):
    """Create a suite given the option.

    This is the main interface between this package and 'run.py'

    Example:
        >>> from suites import create_suite
        >>> suite = create_suite(opt)
    """
    suite = find_suite_using_name(opt.suite)
    instance = suite(opt)
    logger.info("suite [%s] was created", type(instance).__name__)
    return instance
