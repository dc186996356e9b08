# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
"""
import yaml
import os

__all__ = ('settings', 'SimulationSettings', 'TemporarySettings')

class SimulationSettings:
    """
    All settings that may affect fadeloop results, including the overflow
    policy of closed-loop runs, the stability classification thresholds,
    and the parallel work layout of Monte Carlo ensembles.

    Examples
    --------
    >>> from fadeloop import settings
    >>> settings.show()
    SimulationSettings:
    overflow_cap: 1e+150
    tail_fraction: 0.5
    slope_deadband: 0.01
    divergence_tolerance: 0.01
    block_size: 1024
    n_threads: 1
    significant_digits: 9

    Change settings within a context:

    >>> with settings.temporary():
    ...     settings.n_threads = 8
    ...     settings.n_threads
    8
    >>> settings.n_threads
    1

    """
    __slots__ = ('overflow_cap', 'tail_fraction', 'slope_deadband',
                 'divergence_tolerance', 'block_size', '_n_threads',
                 'significant_digits')

    def __init__(self):
        #: Largest magnitude allowed for any entry of A^t, the convolution
        #: sum, the plant state, or the control input before a trial is
        #: aborted as divergent.
        self.overflow_cap: float = 1e150

        #: Fraction of the horizon (from the end) used to fit the
        #: log-slope of the mean square state.
        self.tail_fraction: float = 0.5

        #: Half-width of the dead-band around zero slope [1/step] within
        #: which the verdict is inconclusive.
        self.slope_deadband: float = 0.01

        #: Fraction of diverged trials above which the verdict is unstable.
        self.divergence_tolerance: float = 0.01

        #: Number of trials per work block; aggregation is reduced block by
        #: block in trial-index order.
        self.block_size: int = 1024

        self._n_threads: int = 1

        #: Significant digits of floats written to CSV and JSON outputs.
        self.significant_digits: int = 9

    @property
    def n_threads(self) -> int:
        """Number of worker threads used to run trial blocks. The
        FADELOOP_THREADS environment variable takes precedence."""
        value = os.environ.get('FADELOOP_THREADS')
        if value:
            try:
                return max(int(value), 1)
            except ValueError:
                pass
        return self._n_threads
    @n_threads.setter
    def n_threads(self, n_threads):
        n_threads = int(n_threads)
        if n_threads < 1: raise ValueError('n_threads must be a positive integer')
        self._n_threads = n_threads

    def temporary(self):
        """Return a TemporarySettings object that will revert back to original
        settings after context management."""
        return TemporarySettings()

    def reset(self):
        """Reset to fadeloop defaults."""
        self.__init__()

    def update(self, **kwargs):
        for i, j in kwargs.items(): setattr(self, i, j)

    def autoload(self):
        folder = os.path.dirname(__file__)
        file = os.path.join(folder, 'settings.yaml')
        with open(file, 'r') as stream:
            data = yaml.full_load(stream)
            assert isinstance(data, dict), 'yaml file must return a dict'
        self.update(**data)

    def to_dict(self):
        """Return dictionary of all settings."""
        names = [i.lstrip('_') for i in self.__slots__]
        return {i: getattr(self, i) for i in names}

    def show(self):
        """Print all settings."""
        dct = self.to_dict()
        print(f'{type(self).__name__}:\n' + '\n'.join([f"{i}: {j!r}" for i, j in dct.items()]))
    _ipython_display_ = show


class TemporarySettings:

    def __enter__(self):
        self.__dict__.update({i: getattr(settings, i) for i in settings.__slots__})
        return settings

    def __exit__(self, type, exception, traceback):
        settings.update(**self.__dict__)
        if exception: raise exception

#:
settings: SimulationSettings = SimulationSettings()

if not os.environ.get("DISABLE_SETTINGS_FILE") == "1":
    try: settings.autoload()
    except: pass
