# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
This module includes arbitrary helpers for formatting results.

"""
from collections.abc import Iterable, Mapping
import numpy as np

__all__ = ('roundsigfigs',)

def roundsigfigs(x, sigfigs=9):
    """
    Round floats to the given number of significant digits. Mappings and
    iterables are rounded recursively; non-finite values are returned as is.

    Examples
    --------
    >>> roundsigfigs(0.20751874963942196)
    0.20751875
    >>> roundsigfigs({'a': [1/3, 2]}, 3)
    {'a': [0.333, 2]}

    """
    if isinstance(x, Mapping):
        return {i: roundsigfigs(j, sigfigs) for i, j in x.items()}
    elif isinstance(x, (str, bytes)):
        return x
    elif isinstance(x, Iterable):
        return [roundsigfigs(i, sigfigs) for i in x]
    elif isinstance(x, (bool, np.bool_)):
        return bool(x)
    elif isinstance(x, (int, np.integer)):
        return int(x)
    elif isinstance(x, (float, np.floating)):
        x = float(x)
        if not np.isfinite(x): return x
        return float(format(x, f'.{sigfigs}g'))
    else:
        return x
