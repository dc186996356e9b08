# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
"""
from numba import njit
import numpy as np

__all__ = (
    'expectation',
    'powered_expectation',
    'contraction_factors',
    'snr_capacities',
)

@njit(cache=True)
def expectation(probabilities, values):
    r'''
    Return the expectation of `values` under the finite law given by
    `probabilities`.

    .. math::

        \mathbb{E}\{y\} = \sum_k p_k y_k

    Examples
    --------
    >>> import numpy as np
    >>> float(expectation(np.array([0.5, 0.5]), np.array([1., 0.5])))
    0.75

    '''
    return (probabilities * values).sum()

@njit(cache=True)
def powered_expectation(probabilities, values, exponent):
    r'''
    Return the expectation of `values` raised to `exponent`. Atoms with
    zero probability are skipped so that 0**negative never appears.

    .. math::

        \mathbb{E}\{y^q\} = \sum_{k: p_k > 0} p_k y_k^q

    Examples
    --------
    >>> import numpy as np
    >>> float(powered_expectation(np.array([0.8, 0.2]), np.array([1., 0.5]), 0.5))
    0.94142...

    '''
    total = 0.
    for i in range(probabilities.size):
        p = probabilities[i]
        if p > 0.: total += p * values[i] ** exponent
    return total

@njit(cache=True)
def contraction_factors(gains, power, noise_var):
    r'''
    Return the per-atom error variance contraction of one channel use.

    .. math::

        \rho_k = \frac{\sigma_n^2}{\sigma_n^2 + g_k^2 P}

    A noiseless use with nonzero received power contracts the error to
    zero; a use with no received power leaves it unchanged.

    Examples
    --------
    >>> import numpy as np
    >>> contraction_factors(np.array([0., 1.]), 1., 1.)
    array([1. , 0.5])
    >>> contraction_factors(np.array([0., 1.]), 1., 0.)
    array([1., 0.])

    '''
    N = gains.size
    rhos = np.empty(N)
    for i in range(N):
        received = gains[i] * gains[i] * power
        denominator = noise_var + received
        if denominator > 0.:
            rhos[i] = noise_var / denominator
        else:
            rhos[i] = 1.
    return rhos

@njit(cache=True)
def snr_capacities(gains, power, noise_var):
    r'''
    Return the per-atom Shannon capacity in bits of one channel use.

    .. math::

        c_k = \frac{1}{2} \log_2 \left(1 + \frac{g_k^2 P}{\sigma_n^2}\right)

    Examples
    --------
    >>> import numpy as np
    >>> snr_capacities(np.array([0., 1.]), 3., 1.)
    array([0., 1.])

    '''
    return 0.5 * np.log2(1. + gains * gains * power / noise_var)

del njit
