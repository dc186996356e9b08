# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
Channel capacities are reported in bits per channel use, while the
instantaneous capacity of a single use is naturally expressed in nats.
Conversion goes through pint's application registry.

"""
__all__ = ('ureg', 'convert', 'convert_information', 'information_units')

from .exceptions import DimensionError

# %% Import unit registry

import pint
import os

appreg = pint.get_application_registry()
ureg = appreg.get()
ureg._on_redefinition = 'warn'
try:
    ureg.Unit('nepit')
except pint.UndefinedUnitError: # Avoid reloading definitions if fadeloop is reloaded
    ureg.load_definitions(os.path.join(os.path.dirname(os.path.realpath(__file__)), 'units_of_measure.txt'))

convert = ureg.convert
del os

#: Accepted names of information units. "nat" alone is avoided in the
#: registry because pint parses it as a prefixed technical atmosphere.
information_units = {
    'nat': 'nepit',
    'nats': 'nepit',
    'nepit': 'nepit',
    'bit': 'bit',
    'bits': 'bit',
}

def convert_information(value, from_units, to_units):
    """
    Convert an amount of information between nats and bits.

    Examples
    --------
    >>> convert_information(1., 'nat', 'bit')
    1.442695...
    >>> convert_information(1., 'bit', 'bit')
    1.0

    """
    try:
        from_units = information_units[from_units]
        to_units = information_units[to_units]
    except KeyError as error:
        raise DimensionError(f"{error.args[0]!r} is not a unit of information; "
                             f"valid units are {', '.join(information_units)}")
    if from_units == to_units: return float(value)
    return float(convert(value, from_units, to_units))
