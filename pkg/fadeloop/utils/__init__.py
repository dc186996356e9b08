# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
"""
from . import read_only
from . import representation
from . import misc

__all__ = (*read_only.__all__,
           *representation.__all__,
           *misc.__all__,
)

from .read_only import *
from .representation import *
from .misc import *
