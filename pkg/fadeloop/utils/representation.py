# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
"""
__all__ = ('repr_kwargs',)

def repr_kwargs(kwargs, dlim=", ", spec=None):
    """
    Represent key word arguments, formatting floats with `spec`.

    Examples
    --------
    >>> repr_kwargs({'power': 1., 'noise_var': 0.5})
    'power=1, noise_var=0.5'

    >>> repr_kwargs({'rho': 0.123456789}, spec='.3g')
    'rho=0.123'

    """
    spec = spec or '.6g'
    items = []
    for key, value in kwargs.items():
        if isinstance(value, float): value = format(value, spec)
        else: value = repr(value)
        items.append(f"{key}={value}")
    return dlim.join(items)
