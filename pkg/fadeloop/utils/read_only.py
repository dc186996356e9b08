# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
"""

__all__ = ('read_only', 'setfrozen')

def deny(self, *args, **kwargs):
    raise TypeError(f"'{type(self).__name__}' object is read-only")

def setfrozen(obj, name, value):
    """Set an attribute of a read-only object (only meant for constructors)."""
    object.__setattr__(obj, name, value)

def read_only(cls):
    """
    Decorate a class so that its instances cannot be modified after
    construction. Constructors must use `setfrozen`.

    Examples
    --------
    >>> @read_only
    ... class Point:
    ...     __slots__ = ('x',)
    ...     def __init__(self, x): setfrozen(self, 'x', x)
    >>> point = Point(1.)
    >>> point.x = 2.
    Traceback (most recent call last):
    TypeError: 'Point' object is read-only

    """
    cls.__delattr__ = deny
    cls.__setattr__ = deny
    return cls
