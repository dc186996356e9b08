# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
"""
__version__ = "0.1.0"

from . import (
    utils,
    exceptions,
    functional,
    units_of_measure,
)
from ._settings import settings, SimulationSettings
from ._channel import *
from . import capacity
from .capacity import *
from ._codec import *
from ._control import *
from . import simulation
from .simulation import *
from . import _channel, _codec, _control

__all__ = (*_channel.__all__, *capacity.__all__, *_codec.__all__,
           *_control.__all__, *simulation.__all__,
           'settings', 'SimulationSettings', 'capacity', 'simulation',
           'units_of_measure', 'exceptions', 'functional', 'utils')
