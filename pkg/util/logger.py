"""Utility functions for logging."""

import logging
import os
import sys

__all__ = ['setup_logger']

DEFAULT_WORK_DIR = 'results'


def setup_logger(work_dir=None, logfile_name='log.txt', logger_name='formality', verbose=False):
    """Sets up the package logger.

    Two handlers are attached: a `sys.stderr` stream at `INFO` level (`DEBUG`
    with `verbose`) and, unless `logfile_name` is empty, a file
    `$WORK_DIR/$LOGFILE_NAME` receiving every message. stdout is left to the
    JSON reports. Calling it again replaces the handlers of the same logger.

    Parameters:
        work_dir (str)     -- directory of the log file (default: results)
        logfile_name (str) -- name of the log file; empty disables the file handler
        logger_name (str)  -- name of the configured logger
        verbose (bool)     -- also show debug messages on the screen

    Returns:
        A `logging.Logger` object.
    """
    logger = logging.getLogger(logger_name)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    formatter = logging.Formatter("[%(asctime)s][%(levelname)s] %(message)s")

    sh = logging.StreamHandler(stream=sys.stderr)
    sh.setLevel(logging.DEBUG if verbose else logging.INFO)
    sh.setFormatter(formatter)
    logger.addHandler(sh)

    if not logfile_name:
        return logger

    work_dir = work_dir or DEFAULT_WORK_DIR
    os.makedirs(work_dir, exist_ok=True)
    fh = logging.FileHandler(os.path.join(work_dir, logfile_name))
    fh.setLevel(logging.DEBUG)
    fh.setFormatter(formatter)
    logger.addHandler(fh)

    return logger


def configure_packages(logger):
    """Route the library loggers (algebra, formality, quantize, suites) through <logger>'s handlers."""
    for name in ('algebra', 'formality', 'quantize', 'suites'):
        child = logging.getLogger(name)
        child.handlers = list(logger.handlers)
        child.setLevel(logging.DEBUG)
        child.propagate = False
