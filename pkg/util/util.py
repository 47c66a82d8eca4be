"""This module contains simple helper functions """
import os
import random

import numpy as np
import torch


def set_seed(seed):
    """Seed python, numpy and torch global generators.

    The checks draw from explicit generators; this only pins down anything that
    falls back on the global state.
    """
    random.seed(seed)
    np.random.seed(seed % (2 ** 32))
    torch.manual_seed(seed)


def trial_seeds(seed, trials):
    """Independent per-trial seeds derived from one master seed."""
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(trials)]


def mkdirs(paths):
    """create empty directories if they don't exist

    Parameters:
        paths (str list) -- a list of directory paths
    """
    if isinstance(paths, list) and not isinstance(paths, str):
        for path in paths:
            mkdir(path)
    else:
        mkdir(paths)


def mkdir(path):
    """create a single empty directory if it didn't exist

    Parameters:
        path (str) -- a single directory path
    """
    if not os.path.exists(path):
        os.makedirs(path)
