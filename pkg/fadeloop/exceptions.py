# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
# 
# This module is under the MIT license. See LICENSE.txt for details.
"""
"""
__all__ = (
    'InvalidDistribution',
    'InvalidChannel',
    'InfiniteCapacity',
    'ChannelOverflow',
    'ScheduleError',
    'UncontrollablePair',
    'HorizonOverflow',
    'InfeasibleRegion',
    'DimensionError',
    'message_with_object_stamp',
    'raise_error_with_object_stamp',
)

class InvalidDistribution(ValueError):
    """ValueError regarding an invalid fading law."""

class InvalidChannel(ValueError):
    """ValueError regarding invalid channel parameters."""

class InfiniteCapacity(ValueError):
    """ValueError regarding a noiseless channel in an exact capacity formula."""
    def __init__(self, msg=None):
        super().__init__(msg or 'infinite capacity')

class ChannelOverflow(OverflowError):
    """OverflowError regarding a non-finite channel output."""
    def __init__(self, msg=None):
        super().__init__(msg or 'channel output overflow')

class ScheduleError(ValueError):
    """ValueError regarding an infeasible transmission schedule."""

class UncontrollablePair(ValueError):
    """ValueError regarding a plant whose (A, B) pair is not controllable."""
    def __init__(self, msg=None):
        super().__init__(msg or 'uncontrollable pair')

class HorizonOverflow(OverflowError):
    """OverflowError regarding controller terms beyond the overflow cap."""
    def __init__(self, msg=None):
        super().__init__(msg or 'horizon overflow')

class InfeasibleRegion(RuntimeError):
    """Runtime error regarding infeasible thresholds."""
    def __init__(self, region, msg=None): 
        self.region = region
        if msg is None: msg = region + ' is infeasible'
        super().__init__(msg)

class DimensionError(ValueError):
    """ValueError regarding wrong dimensions."""

def message_with_object_stamp(object, msg):
    object_name = repr(object)
    if object_name in msg:
        return msg
    else:
        return object_name + ' ' + msg

def raise_error_with_object_stamp(object, error):
    try: 
        msg, *args = error.args
        error.args = (message_with_object_stamp(object, msg), *args)
    except: pass
    raise error
