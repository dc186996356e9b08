# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
This module contains the seeded Monte Carlo harness that closes the loop
plant -> encoder -> channel -> decoder -> controller, the aggregation of
ensemble statistics, the stability verdict, and the tables of capacities
and stability regions.

Trials are split into blocks of `settings.block_size` trials. Each trial
draws its randomness from RngStream(master_seed, trial_index), blocks may
run in worker threads, and per-step sums are reduced block by block in
trial order, so results do not depend on the number of threads.

"""
import numpy as np
import pandas as pd
from math import isnan
from warnings import warn
from concurrent.futures import ThreadPoolExecutor
from scipy.stats import linregress
from ._settings import settings
from ._channel import ChannelParams, FadingDistribution, RngStream, sample_fades, sample_noise
from ._codec import Schedule, VectorCodecState, vector_step
from ._control import PlantSpec, ControllerState, deadbeat_gain, control_inputs
from .capacity import (
    SpectrumSpec, necessity_bounds, shannon_capacity, mean_square_capacity,
    linear_ms_capacity, _mean_square_capacity_limit, _linear_capacity_limit,
    SUFFICIENT, GAP, EXCLUDED,
)
from .exceptions import HorizonOverflow, DimensionError, raise_error_with_object_stamp
from .utils import read_only, setfrozen, repr_kwargs
from . import functional as fn

__all__ = (
    'Verdict',
    'SimConfig',
    'EnsembleStats',
    'run_estimation',
    'run_closed_loop',
    'expected_tracked_variance',
    'tail_slope',
    'classify_stability',
    'sweep_capacity',
    'region_grid',
)

class Verdict:
    """Mean square stability verdicts of a Monte Carlo ensemble."""
    stable = 'Stable'
    unstable = 'Unstable'
    inconclusive = 'Inconclusive'
    values = (stable, unstable, inconclusive)


@read_only
class SimConfig:
    """
    Create a SimConfig object that defines a Monte Carlo experiment.

    Parameters
    ----------
    plant : PlantSpec
        Plant; vector plants must be diagonal.
    channel : ChannelParams
        Power constrained fading channel.
    prior_cov : float, 1d array or 2d array
        Diagonal covariance of the Gaussian initial state (a variance, the
        diagonal, or the full diagonal matrix).
    trials : int
        Number of Monte Carlo trials, N >= 1.
    horizon : int
        Number of time steps, T >= 2.
    master_seed : int
        Nonnegative 64-bit seed of the experiment.
    schedule : Schedule, optional
        Time division schedule; required if and only if the state is a vector.
    overflow_cap : float, optional
        Largest magnitude of controller terms and plant states. Defaults to
        `settings.overflow_cap`.

    Examples
    --------
    >>> from fadeloop import SimConfig, PlantSpec, ChannelParams, FadingDistribution
    >>> config = SimConfig(PlantSpec.scalar(1.1), ChannelParams(1., 1., FadingDistribution.bernoulli(0.5)),
    ...                    prior_cov=1., trials=100, horizon=50, master_seed=42)
    >>> config.prior_vars
    array([1.])
    >>> config.copy(trials=0)
    Traceback (most recent call last):
    ValueError: trials must be a positive integer, not 0

    """
    __slots__ = ('plant', 'channel', 'prior_cov', 'trials', 'horizon',
                 'master_seed', 'schedule', 'overflow_cap')

    def __init__(self, plant, channel, prior_cov, trials, horizon,
                 master_seed, schedule=None, overflow_cap=None):
        if not isinstance(plant, PlantSpec):
            raise ValueError(f"plant must be a 'PlantSpec' object, not a '{type(plant).__name__}'")
        if not isinstance(channel, ChannelParams):
            raise ValueError(f"channel must be a 'ChannelParams' object, not a '{type(channel).__name__}'")
        n = plant.n
        prior_cov = np.asarray(prior_cov, dtype=float)
        if prior_cov.ndim == 0:
            prior_cov = np.eye(n) * prior_cov
        elif prior_cov.ndim == 1:
            prior_cov = np.diag(prior_cov)
        if prior_cov.shape != (n, n):
            raise DimensionError(f'prior covariance must be {n}x{n}, not {prior_cov.shape}')
        if (prior_cov != np.diag(np.diag(prior_cov))).any():
            raise ValueError('prior covariance must be diagonal')
        if not (np.isfinite(prior_cov).all() and (np.diag(prior_cov) > 0.).all()):
            raise ValueError('prior variances must be positive and finite')
        trials = int(trials)
        horizon = int(horizon)
        master_seed = int(master_seed)
        if trials < 1: raise ValueError(f'trials must be a positive integer, not {trials}')
        if horizon < 2: raise ValueError(f'horizon must be at least 2, not {horizon}')
        if not 0 <= master_seed < 2**64:
            raise ValueError(f'master seed must be a nonnegative 64-bit integer, not {master_seed}')
        if n == 1:
            if schedule is not None: raise ValueError('scalar plants take no schedule')
        else:
            if schedule is None: raise ValueError('vector plants require a schedule')
            if not isinstance(schedule, Schedule):
                raise ValueError(f"schedule must be a 'Schedule' object, not a '{type(schedule).__name__}'")
            if schedule.size != n:
                raise DimensionError(f'schedule serves {schedule.size} coordinates, not {n}')
            if not plant.is_diagonal:
                raise ValueError('vector plants must be diagonal (real simple eigenvalues)')
        overflow_cap = settings.overflow_cap if overflow_cap is None else float(overflow_cap)
        if not overflow_cap > 0.: raise ValueError('overflow cap must be positive')
        prior_cov.setflags(write=False)
        setfrozen(self, 'plant', plant)
        setfrozen(self, 'channel', channel)
        setfrozen(self, 'prior_cov', prior_cov)
        setfrozen(self, 'trials', trials)
        setfrozen(self, 'horizon', horizon)
        setfrozen(self, 'master_seed', master_seed)
        setfrozen(self, 'schedule', schedule)
        setfrozen(self, 'overflow_cap', overflow_cap)

    @property
    def prior_vars(self):
        """[1d array] Prior variance of each coordinate of x0."""
        return np.diag(self.prior_cov).copy()

    @property
    def codec_schedule(self):
        """[Schedule] Schedule of the codec (a single slot for scalar plants)."""
        return Schedule.single() if self.schedule is None else self.schedule

    def copy(self, **kwargs):
        """Return a copy with the given fields replaced."""
        data = {i: getattr(self, i) for i in self.__slots__}
        data.update(kwargs)
        return type(self)(**data)

    def __repr__(self):
        data = dict(plant=self.plant, channel=self.channel, trials=self.trials,
                    horizon=self.horizon, master_seed=self.master_seed)
        if self.schedule is not None: data['schedule'] = self.schedule
        return f"{type(self).__name__}({repr_kwargs(data)})"


class EnsembleStats:
    """
    Create an EnsembleStats object that holds per-step ensemble means (and
    their standard errors) of a Monte Carlo experiment.

    Parameters
    ----------
    mean_sq_state : 1d array
        Sample mean of |x[t]|^2 (of |A^t e[t]|^2 when no controller is engaged).
    mean_sq_error : 1d array
        Sample mean of |e[t]|^2, e[t] = xhat[t] - x0.
    mean_tracked_var : 1d array
        Sample mean of the sum of tracked error variances.
    power_usage : 1d array
        Sample mean of the squared channel input.
    diverged_count : int
        Number of trials aborted at the overflow cap.
    trials : int
        Number of trials.

    Other attributes hold standard errors (`se_*`), the per-coordinate mean
    error, the calibration gap |e[t]|^2 - sum(v[t]), the exact expected
    tracked variance, the number of active trials at each step, the step at
    which a closed-loop horizon was truncated (`truncated_at`) and the step
    from which the propagated error of an estimation run exceeds the
    overflow cap (`state_capped_at`).

    """
    __slots__ = ('mean_sq_state', 'mean_sq_error', 'mean_tracked_var',
                 'power_usage', 'diverged_count', 'trials', 'verdict',
                 'se_mean_sq_state', 'se_mean_sq_error', 'se_mean_tracked_var',
                 'se_power_usage', 'mean_error', 'se_mean_error',
                 'calibration_gap', 'se_calibration_gap',
                 'expected_tracked_var', 'active_count', 'truncated_at',
                 'state_capped_at')

    def __init__(self, mean_sq_state, mean_sq_error, mean_tracked_var,
                 power_usage, diverged_count, trials, verdict=None, **others):
        self.mean_sq_state = np.asarray(mean_sq_state, dtype=float)
        self.mean_sq_error = np.asarray(mean_sq_error, dtype=float)
        self.mean_tracked_var = np.asarray(mean_tracked_var, dtype=float)
        self.power_usage = np.asarray(power_usage, dtype=float)
        T = self.mean_sq_state.size
        for i in (self.mean_sq_error, self.mean_tracked_var, self.power_usage):
            if i.size != T: raise DimensionError('all trajectories must have the same length')
        self.diverged_count = int(diverged_count)
        self.trials = int(trials)
        for i in self.__slots__[7:]: setattr(self, i, others.pop(i, None))
        if others: raise TypeError(f"unexpected fields: {', '.join(others)}")
        if verdict is None:
            verdict = classify_stability(self) if T >= 20 else Verdict.inconclusive
        self.verdict = verdict

    @classmethod
    def from_trajectory(cls, mean_sq_state, trials=1, diverged_count=0):
        """Return an EnsembleStats object that only holds a state trajectory."""
        mean_sq_state = np.asarray(mean_sq_state, dtype=float)
        nan = np.full(mean_sq_state.size, np.nan)
        return cls(mean_sq_state, nan, nan, nan, diverged_count, trials)

    @property
    def horizon(self):
        """[int] Number of time steps."""
        return self.mean_sq_state.size

    @property
    def diverged_fraction(self):
        """[float] Fraction of trials aborted at the overflow cap."""
        return self.diverged_count / self.trials

    @property
    def tail_slope(self):
        """[float] Least-squares slope of ln(mean_sq_state) over the tail."""
        return tail_slope(self.mean_sq_state)

    def to_frame(self):
        """Return a pandas DataFrame of the per-step ensemble columns."""
        return pd.DataFrame({
            't': np.arange(self.horizon),
            'mean_sq_state': self.mean_sq_state,
            'mean_sq_error': self.mean_sq_error,
            'mean_tracked_var': self.mean_tracked_var,
            'mean_power': self.power_usage,
        })

    def summary(self):
        """Return a dictionary of the verdict and its evidence."""
        return {'verdict': self.verdict,
                'tail_slope': self.tail_slope,
                'diverged_count': self.diverged_count,
                'trials': self.trials,
                'horizon': self.horizon}

    def __repr__(self):
        return f"<{type(self).__name__}: {self.trials} trials, {self.horizon} steps, {self.verdict}>"

# %% Block engine

class _BlockSums:
    __slots__ = ('active', 'state', 'state2', 'error', 'error2', 'tracked',
                 'tracked2', 'power', 'power2', 'coordinate', 'coordinate2',
                 'gap', 'gap2', 'diverged', 'truncated_at', 'state_capped_at')
    _arrays = __slots__[:-3]

    def __init__(self, T, n):
        self.active = np.zeros(T, dtype=int)
        for i in ('state', 'state2', 'error', 'error2', 'tracked', 'tracked2',
                  'power', 'power2', 'gap', 'gap2'):
            setattr(self, i, np.zeros(T))
        self.coordinate = np.zeros((T, n))
        self.coordinate2 = np.zeros((T, n))
        self.diverged = 0
        self.truncated_at = None
        self.state_capped_at = None

    def add(self, t, active, state_sq, error, tracked, s):
        with np.errstate(over='ignore', invalid='ignore'):
            self._add(t, active, state_sq, error, tracked, s)

    def _add(self, t, active, state_sq, error, tracked, s):
        error = error[active]
        error_sq = (error * error).sum(axis=1)
        state_sq = state_sq[active]
        tracked = tracked[active]
        power = s[active] ** 2
        gap = error_sq - tracked
        self.active[t] = error.shape[0]
        self.state[t] = state_sq.sum()
        self.state2[t] = (state_sq * state_sq).sum()
        self.error[t] = error_sq.sum()
        self.error2[t] = (error_sq * error_sq).sum()
        self.tracked[t] = tracked.sum()
        self.tracked2[t] = (tracked * tracked).sum()
        self.power[t] = power.sum()
        self.power2[t] = (power * power).sum()
        self.coordinate[t] = error.sum(axis=0)
        self.coordinate2[t] = (error * error).sum(axis=0)
        self.gap[t] = gap.sum()
        self.gap2[t] = (gap * gap).sum()

    def __iadd__(self, other):
        for i in self._arrays: setattr(self, i, getattr(self, i) + getattr(other, i))
        self.diverged += other.diverged
        for i in ('truncated_at', 'state_capped_at'):
            step = getattr(other, i)
            if step is None: continue
            current = getattr(self, i)
            if current is None or step < current: setattr(self, i, step)
        return self


def _mean_and_error(total, total_sq, count):
    with np.errstate(divide='ignore', invalid='ignore'):
        mean = total / count
        variance = (total_sq - count * mean * mean) / (count - 1)
        error = np.sqrt(np.maximum(variance, 0.) / count)
    return mean, error

def _draw_block(config, start, stop):
    n = config.plant.n
    T = config.horizon
    m = stop - start
    channel = config.channel
    std = np.sqrt(config.prior_vars)
    x0 = np.empty((m, n))
    fades = np.empty((m, T))
    noises = np.empty((m, T))
    for row, index in enumerate(range(start, stop)):
        rng = RngStream(config.master_seed, index)
        x0[row] = std * rng.prior.standard_normal(n)
        fades[row] = sample_fades(channel.fading, rng, T)
        noises[row] = sample_noise(channel, rng, T)
    return x0, fades, noises

def _bounded(x, cap):
    return np.isfinite(x) & (np.abs(x) <= cap)

def _simulate_block(config, gain, start, stop):
    plant = config.plant
    channel = config.channel
    A = plant.A
    n = plant.n
    T = config.horizon
    cap = config.overflow_cap
    m = stop - start
    closed_loop = gain is not None
    x0, fades, noises = _draw_block(config, start, stop)
    codec = VectorCodecState.initial(config.prior_vars, config.codec_schedule, m, x0)
    if closed_loop:
        ctrl = ControllerState.initial(plant, gain, m)
        x = x0.copy()
    else:
        power_of_A = np.eye(n)
    active = np.ones(m, dtype=bool)
    sums = _BlockSums(T, n)
    for t in range(T):
        codec, s = vector_step(codec, x0, channel, fades[:, t], noises[:, t])
        error = codec.errors
        if closed_loop:
            state_sq = (x * x).sum(axis=1)
        elif sums.state_capped_at is None:
            propagated = error @ power_of_A.T
            state_sq = (propagated * propagated).sum(axis=1)
        else:
            state_sq = np.full(m, np.nan)
        sums.add(t, active, state_sq, error, codec.variances.sum(axis=1), s)
        if t == T - 1: break
        if not closed_loop:
            if sums.state_capped_at is None:
                power_of_A = A @ power_of_A
                if not _bounded(power_of_A, cap).all(): sums.state_capped_at = t + 1
            continue
        try:
            u, ctrl, overflowed = control_inputs(ctrl, codec.estimates, cap, x, error)
        except HorizonOverflow:
            sums.diverged += int(active.sum())
            sums.truncated_at = t + 1
            break
        x = x @ A.T + np.multiply.outer(u, plant.B)
        overflowed = (overflowed | ~_bounded(x, cap).all(axis=1)) & active
        sums.diverged += int(overflowed.sum())
        active &= ~overflowed
        if not active.all():
            # Aborted trials are held at zero.
            x[~active] = 0.
            conv_sum = np.where(active[:, None], ctrl.conv_sum, 0.)
            ctrl = ControllerState(plant, gain, ctrl.power_of_A, conv_sum, ctrl.t)
    return sums

def expected_tracked_variance(config):
    """
    Return the exact expectation of the sum of tracked error variances at
    each step, computed from the fading law alone.

    Examples
    --------
    >>> from fadeloop import SimConfig, PlantSpec, ChannelParams, FadingDistribution
    >>> from fadeloop import expected_tracked_variance
    >>> config = SimConfig(PlantSpec.scalar(1.1), ChannelParams(1., 1., FadingDistribution.bernoulli(0.5)),
    ...                    prior_cov=1., trials=1, horizon=4, master_seed=0)
    >>> expected_tracked_variance(config)
    array([1.5      , 1.125    , 0.84375  , 0.6328125])

    """
    channel = config.channel
    fading = channel.fading
    P = channel.power
    prior_vars = config.prior_vars
    schedule = config.codec_schedule
    if P == 0.:
        return np.full(config.horizon, prior_vars.sum())
    rho = float(fn.expectation(fading.probabilities, channel.contraction_factors()))
    mismatch = float(fn.expectation(fading.probabilities, (fading.gains - 1.) ** 2))
    first = prior_vars * (mismatch + channel.noise_var / P)
    values = np.empty(config.horizon)
    for t in range(config.horizon):
        uses = schedule.uses(t)
        used = uses > 0
        values[t] = np.where(used, first * rho ** np.maximum(uses - 1, 0), prior_vars).sum()
    return values

def _run(config, gain=None):
    N = config.trials
    T = config.horizon
    block_size = settings.block_size
    blocks = [(i, min(i + block_size, N)) for i in range(0, N, block_size)]
    simulate = lambda block: _simulate_block(config, gain, *block)
    n_threads = min(settings.n_threads, len(blocks))
    if n_threads == 1:
        results = [simulate(i) for i in blocks]
    else:
        with ThreadPoolExecutor(n_threads) as executor:
            results = list(executor.map(simulate, blocks))
    sums = results[0]
    for i in results[1:]: sums += i
    count = sums.active.astype(float)
    mean_sq_state, se_mean_sq_state = _mean_and_error(sums.state, sums.state2, count)
    mean_sq_error, se_mean_sq_error = _mean_and_error(sums.error, sums.error2, count)
    mean_tracked_var, se_mean_tracked_var = _mean_and_error(sums.tracked, sums.tracked2, count)
    power_usage, se_power_usage = _mean_and_error(sums.power, sums.power2, count)
    calibration_gap, se_calibration_gap = _mean_and_error(sums.gap, sums.gap2, count)
    mean_error, se_mean_error = _mean_and_error(sums.coordinate, sums.coordinate2, count[:, None])
    if sums.truncated_at is not None:
        warn(f'A^t exceeded the overflow cap at step {sums.truncated_at} of {T}; '
             f'the horizon was truncated and active trials counted as diverged',
             RuntimeWarning, stacklevel=3)
    if sums.state_capped_at is not None:
        warn(f'A^t exceeded the overflow cap at step {sums.state_capped_at} of {T}; '
             f'the propagated error |A^t e[t]|^2 is NaN from there on',
             RuntimeWarning, stacklevel=3)
    if sums.diverged:
        warn(f'{sums.diverged} of {N} trials diverged ({sums.diverged / N:.2%})',
             RuntimeWarning, stacklevel=3)
    return EnsembleStats(
        mean_sq_state, mean_sq_error, mean_tracked_var, power_usage,
        sums.diverged, N,
        se_mean_sq_state=se_mean_sq_state,
        se_mean_sq_error=se_mean_sq_error,
        se_mean_tracked_var=se_mean_tracked_var,
        se_power_usage=se_power_usage,
        mean_error=mean_error,
        se_mean_error=se_mean_error,
        calibration_gap=calibration_gap,
        se_calibration_gap=se_calibration_gap,
        expected_tracked_var=expected_tracked_variance(config),
        active_count=sums.active,
        truncated_at=sums.truncated_at,
        state_capped_at=sums.state_capped_at,
    )

def run_estimation(config):
    """
    Return the EnsembleStats object of N open-loop trials in which the
    codec refines the decoder's estimate of x0 for T channel uses. The
    state column holds |A^t e[t]|^2, the part of the state the controller
    cannot cancel; it is NaN once an entry of A^t exceeds the overflow cap,
    while the estimation columns stay populated and no trial is counted as
    diverged.

    """
    try:
        return _run(config)
    except Exception as error:
        raise_error_with_object_stamp(config, error)

def run_closed_loop(config):
    """
    Return the EnsembleStats object of N closed-loop trials: at each step
    the codec refines the estimate of x0, the deadbeat estimate-then-control
    law computes the input and the plant advances. Trials that exceed the
    overflow cap are counted as diverged.

    Raises
    ------
    UncontrollablePair
        Before any trial, if the plant is not controllable.

    """
    gain = deadbeat_gain(config.plant)
    try:
        return _run(config, gain)
    except Exception as error:
        raise_error_with_object_stamp(config, error)

# %% Stability verdict

def tail_slope(trajectory, tail_fraction=None):
    """
    Return the least-squares slope of the natural log of the positive,
    finite entries of the final `tail_fraction` of a trajectory, or NaN if
    fewer than two entries qualify.

    Examples
    --------
    >>> import numpy as np
    >>> from fadeloop import tail_slope
    >>> bool(abs(tail_slope(0.9 ** np.arange(40)) - np.log(0.9)) < 1e-12)
    True

    """
    if tail_fraction is None: tail_fraction = settings.tail_fraction
    if not 0. < tail_fraction <= 1.: raise ValueError('tail fraction must be in (0, 1]')
    y = np.asarray(trajectory, dtype=float)
    T = y.size
    length = min(max(int(round(tail_fraction * T)), 2), T)
    t = np.arange(T - length, T)
    y = y[T - length:]
    mask = np.isfinite(y) & (y > 0.)
    if mask.sum() < 2: return np.nan
    return float(linregress(t[mask], np.log(y[mask])).slope)

def classify_stability(stats, tail_fraction=None):
    """
    Return the stability verdict of an ensemble (or of a trajectory of
    mean squared states): Unstable if more than `settings.divergence_tolerance`
    of the trials diverged; otherwise Stable, Unstable or Inconclusive as
    the tail log-slope falls below, above or within the dead-band
    +/- `settings.slope_deadband`. A trajectory that vanishes is Stable.

    Examples
    --------
    >>> import numpy as np
    >>> from fadeloop import classify_stability
    >>> t = np.arange(100)
    >>> classify_stability(0.9 ** t), classify_stability(1.1 ** t), classify_stability(np.ones(100))
    ('Stable', 'Unstable', 'Inconclusive')

    """
    if isinstance(stats, EnsembleStats):
        trajectory = stats.mean_sq_state
        diverged_fraction = stats.diverged_fraction
    else:
        trajectory = np.asarray(stats, dtype=float)
        diverged_fraction = 0.
    if trajectory.size < 20:
        raise ValueError(f'stability classification requires at least 20 steps, not {trajectory.size}')
    if diverged_fraction > settings.divergence_tolerance: return Verdict.unstable
    slope = tail_slope(trajectory, tail_fraction)
    if isnan(slope):
        tail = trajectory[-max(int(round((tail_fraction or settings.tail_fraction) * trajectory.size)), 2):]
        finite = tail[np.isfinite(tail)]
        return Verdict.stable if finite.size and not finite.any() else Verdict.inconclusive
    deadband = settings.slope_deadband
    if slope < -deadband:
        return Verdict.stable
    elif slope > deadband:
        return Verdict.unstable
    else:
        return Verdict.inconclusive

# %% Tables

def sweep_capacity(epsilon_grid, power, noise_var):
    """
    Return a pandas DataFrame of the Shannon capacity, the mean square
    capacity and the linear mean square capacity [bits] of Bernoulli fading
    channels over a grid of failure probabilities, sorted by probability.

    Examples
    --------
    >>> from fadeloop import sweep_capacity
    >>> sweep_capacity([1., 0., 0.5], 1., 1.).round(6)
       epsilon  shannon_bits  msc_bits  msl_bits
    0      0.0          0.50  0.500000  0.500000
    1      0.5          0.25  0.207519  0.131517
    2      1.0          0.00  0.000000  0.000000

    """
    epsilons = np.unique(np.asarray(epsilon_grid, dtype=float))
    if not epsilons.size: raise ValueError('failure probability grid is empty')
    rows = []
    for epsilon in epsilons:
        params = ChannelParams(power, noise_var, FadingDistribution.bernoulli(epsilon))
        rows.append((epsilon, shannon_capacity(params),
                     mean_square_capacity(params),
                     linear_ms_capacity(params)))
    return pd.DataFrame(rows, columns=['epsilon', 'shannon_bits', 'msc_bits', 'msl_bits'])

def region_grid(epsilon, power, noise_var, grid_max=0.3, steps=200):
    """
    Return a pandas DataFrame that labels each point of a grid over
    (log2|lambda_1|, log2|lambda_2|) in [0, grid_max]^2 as SUFFICIENT, GAP
    or EXCLUDED for a two-mode plant with real simple eigenvalues over a
    Bernoulli fading channel, with a flag for log2|lambda_1| + log2|lambda_2|
    below the linear mean square capacity.

    Examples
    --------
    >>> from fadeloop import region_grid
    >>> frame = region_grid(0.8, 1., 1., grid_max=0.1, steps=11)
    >>> labels = frame.set_index(['log_l1', 'log_l2'])['label']
    >>> labels[0., 0.], labels[0.05, 0.05], labels[0.07, 0.01]
    ('SUFFICIENT', 'EXCLUDED', 'GAP')

    """
    steps = int(steps)
    grid_max = float(grid_max)
    if steps < 2: raise ValueError(f'steps must be at least 2, not {steps}')
    if not (np.isfinite(grid_max) and grid_max > 0.):
        raise ValueError(f'grid maximum must be positive, not {grid_max}')
    params = ChannelParams(power, noise_var, FadingDistribution.bernoulli(epsilon))
    grid = np.linspace(0., grid_max, steps).round(12)
    L1, L2 = np.meshgrid(grid, grid, indexing='ij')
    L = np.stack([L1.ravel(), L2.ravel()], axis=-1)
    total = L.sum(axis=1)
    sufficient = total < _mean_square_capacity_limit(params)
    necessary = np.ones(total.size, dtype=bool)
    for coefficients, bound in necessity_bounds(SpectrumSpec.real_simple([0., 0.]), params):
        necessary &= L @ coefficients < bound
    labels = np.where(sufficient, SUFFICIENT, np.where(necessary, GAP, EXCLUDED)).astype(object)
    return pd.DataFrame({
        'log_l1': L[:, 0],
        'log_l2': L[:, 1],
        'label': labels,
        'linear_ok': total < _linear_capacity_limit(params),
    })
