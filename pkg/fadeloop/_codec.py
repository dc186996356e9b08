# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
This module contains the causal encoder/decoder pair that refines the
decoder's estimate of the initial state x0 over the fading channel, and its
time division extension for vector states.

Codec states are values: `decode_update` and `vector_round` return new
states. Estimates and tracked variances may be floats (one trial) or arrays
(one entry per trial, all trials advancing in lockstep).

"""
import numpy as np
from warnings import warn
from math import isfinite
from ._channel import ChannelParams, transmit
from .exceptions import ChannelOverflow, ScheduleError, DimensionError
from .utils import read_only, setfrozen, repr_kwargs

__all__ = (
    'ScalarCodecState',
    'VectorCodecState',
    'Schedule',
    'encode',
    'decode_update',
    'make_schedule',
    'proportional_shares',
    'vector_step',
    'vector_round',
)

#: Tolerance on the sum of target shares of a schedule.
share_tolerance = 1e-9

def _value(x):
    return float(x) if np.ndim(x) == 0 else np.asarray(x, dtype=float)

@read_only
class ScalarCodecState:
    """
    Create a ScalarCodecState object that holds the decoder's estimate of
    one coordinate of x0 together with the conditional variance of its
    error, which both ends of the link track along the realized fades.

    Parameters
    ----------
    estimate : float or 1d array
        Decoder estimate of x0.
    cond_error_var : float or 1d array
        Variance of the estimation error given the realized fade history.
    step : int
        Number of channel uses already spent on this coordinate.
    prior_var : float
        Prior variance of x0.
    error : float or 1d array, optional
        Estimation error, estimate - x0, as seen by the encoder. If given,
        it is updated along with the estimate instead of being recomputed
        from x0, so it keeps its relative precision as it vanishes.

    Examples
    --------
    >>> from fadeloop import ScalarCodecState
    >>> ScalarCodecState.initial(4.)
    ScalarCodecState(estimate=0, cond_error_var=4, step=0, prior_var=4)
    >>> ScalarCodecState.initial(4., x0=2.)
    ScalarCodecState(estimate=0, cond_error_var=4, step=0, prior_var=4, error=-2)

    """
    __slots__ = ('estimate', 'cond_error_var', 'step', 'prior_var', 'error')

    def __init__(self, estimate, cond_error_var, step, prior_var, error=None):
        prior_var = float(prior_var)
        if not (isfinite(prior_var) and prior_var > 0.):
            raise ValueError(f'prior variance must be positive, not {prior_var}')
        step = int(step)
        if step < 0: raise ValueError(f'step must be nonnegative, not {step}')
        setfrozen(self, 'estimate', _value(estimate))
        setfrozen(self, 'cond_error_var', _value(cond_error_var))
        setfrozen(self, 'step', step)
        setfrozen(self, 'prior_var', prior_var)
        setfrozen(self, 'error', None if error is None else _value(error))

    @classmethod
    def initial(cls, prior_var, size=None, x0=None):
        """
        Return the state before any channel use: the prior mean and
        variance. If `x0` is given, the estimation error is tracked too.

        """
        if size is None:
            estimate = 0.
            cond_error_var = prior_var
        else:
            estimate = np.zeros(size)
            cond_error_var = np.full(size, float(prior_var))
        error = None if x0 is None else estimate - np.asarray(x0, dtype=float)
        return cls(estimate, cond_error_var, 0, prior_var, error)

    @property
    def tracks_error(self):
        """[bool] Whether the estimation error is propagated with the estimate."""
        return self.error is not None

    def __repr__(self):
        data = dict(estimate=self.estimate, cond_error_var=self.cond_error_var,
                    step=self.step, prior_var=self.prior_var)
        if self.tracks_error: data['error'] = self.error
        return f"{type(self).__name__}({repr_kwargs(data)})"


@read_only
class Schedule:
    """
    Create a Schedule object that assigns each of the `period` channel uses
    of a cycle to one coordinate of the state.

    Parameters
    ----------
    period : int
        Number of channel uses per cycle, tau.
    slot_owner : Iterable[int]
        Coordinate served at each channel use of the cycle.
    alphas : Iterable[float]
        Target shares of channel uses of each coordinate.

    Examples
    --------
    >>> from fadeloop import make_schedule
    >>> schedule = make_schedule([2/3, 1/3], 3)
    >>> schedule
    Schedule(period=3, slot_owner=(0, 1, 0), alphas=(0.666667, 0.333333))
    >>> schedule.slot_counts
    (2, 1)

    """
    __slots__ = ('period', 'slot_owner', 'alphas')

    def __init__(self, period, slot_owner, alphas):
        period = int(period)
        slot_owner = tuple([int(i) for i in slot_owner])
        alphas = tuple([float(i) for i in alphas])
        if period < 1: raise ScheduleError(f'period must be a positive integer, not {period}')
        if len(slot_owner) != period:
            raise ScheduleError(f'schedule must assign {period} slots, not {len(slot_owner)}')
        n = len(alphas)
        if any([not 0 <= i < n for i in slot_owner]):
            raise ScheduleError(f'slot owners must be coordinate indices below {n}')
        setfrozen(self, 'period', period)
        setfrozen(self, 'slot_owner', slot_owner)
        setfrozen(self, 'alphas', alphas)

    @classmethod
    def single(cls):
        """Return the schedule of a scalar state."""
        return cls(1, (0,), (1.,))

    @property
    def size(self):
        """[int] Number of coordinates served."""
        return len(self.alphas)

    @property
    def slot_counts(self):
        """tuple[int] Number of slots owned by each coordinate per cycle."""
        counts = [0] * self.size
        for i in self.slot_owner: counts[i] += 1
        return tuple(counts)

    @property
    def shares(self):
        """[1d array] Realized share of channel uses of each coordinate."""
        return np.array(self.slot_counts) / self.period

    def owner(self, t):
        """Return the coordinate served at channel use `t`."""
        return self.slot_owner[t % self.period]

    def uses(self, t):
        """Return the number of channel uses each coordinate received in uses 0, ..., t."""
        cycles, remainder = divmod(t + 1, self.period)
        counts = np.array(self.slot_counts) * cycles
        for i in self.slot_owner[:remainder]: counts[i] += 1
        return counts

    def __eq__(self, other):
        return (isinstance(other, Schedule)
                and self.period == other.period
                and self.slot_owner == other.slot_owner
                and self.alphas == other.alphas)

    def __hash__(self):
        return hash((self.period, self.slot_owner, self.alphas))

    def __repr__(self):
        alphas = ', '.join([format(i, '.6g') for i in self.alphas])
        if len(self.alphas) == 1: alphas += ','
        return f"{type(self).__name__}(period={self.period}, slot_owner={self.slot_owner}, alphas=({alphas}))"


@read_only
class VectorCodecState:
    """
    Create a VectorCodecState object that holds one ScalarCodecState per
    coordinate of x0, the schedule that decides which coordinate each
    channel use refines, and the cursor of the next slot.

    Examples
    --------
    >>> from fadeloop import VectorCodecState, make_schedule
    >>> state = VectorCodecState.initial([1., 2.], make_schedule([0.5, 0.5], 2))
    >>> state.owner, state.estimates, state.variances
    (0, array([0., 0.]), array([1., 2.]))

    """
    __slots__ = ('coordinates', 'schedule', 'cursor')

    def __init__(self, coordinates, schedule, cursor=0):
        coordinates = tuple(coordinates)
        if not isinstance(schedule, Schedule):
            raise ValueError(f"schedule must be a 'Schedule' object, not a '{type(schedule).__name__}'")
        if len(coordinates) != schedule.size:
            raise DimensionError(f'schedule serves {schedule.size} coordinates, not {len(coordinates)}')
        cursor = int(cursor)
        if not 0 <= cursor < schedule.period:
            raise ScheduleError(f'cursor must be in [0, {schedule.period}), not {cursor}')
        setfrozen(self, 'coordinates', coordinates)
        setfrozen(self, 'schedule', schedule)
        setfrozen(self, 'cursor', cursor)

    @classmethod
    def initial(cls, prior_vars, schedule, size=None, x0=None):
        """
        Return the state before any channel use. If `x0` is given (its
        coordinates along the last axis), estimation errors are tracked.

        """
        if x0 is None:
            coordinates = [ScalarCodecState.initial(i, size) for i in prior_vars]
        else:
            x0 = np.asarray(x0, dtype=float)
            coordinates = [ScalarCodecState.initial(j, size, x0[..., i])
                           for i, j in enumerate(prior_vars)]
        return cls(coordinates, schedule)

    @property
    def owner(self):
        """[int] Coordinate refined by the next channel use."""
        return self.schedule.slot_owner[self.cursor]

    @property
    def estimates(self):
        """[array] Estimates of all coordinates (last axis)."""
        return np.stack([np.asarray(i.estimate, dtype=float) for i in self.coordinates], axis=-1)

    @property
    def variances(self):
        """[array] Tracked error variances of all coordinates (last axis)."""
        return np.stack([np.asarray(i.cond_error_var, dtype=float) for i in self.coordinates], axis=-1)

    @property
    def errors(self):
        """[array] Tracked estimation errors of all coordinates (last axis)."""
        if not all([i.tracks_error for i in self.coordinates]):
            raise AttributeError('estimation errors are not tracked; initialize with x0')
        return np.stack([np.asarray(i.error, dtype=float) for i in self.coordinates], axis=-1)

    def replace(self, index, coordinate):
        """Return the state after a channel use that refined coordinate `index`."""
        coordinates = list(self.coordinates)
        coordinates[index] = coordinate
        return type(self)(coordinates, self.schedule, (self.cursor + 1) % self.schedule.period)

    def __repr__(self):
        return f"<{type(self).__name__}: {len(self.coordinates)} coordinates, cursor={self.cursor}>"

# %% Scalar encoder/decoder

def encode(state, x0, P):
    """
    Return the channel input that carries the current estimation error of
    `x0`, normalized to second moment `P`.

    At step 0 the input is sqrt(P / prior_var) * x0; afterwards it is
    sqrt(P / v) * (estimate - x0), which is zero once v is zero (or has
    underflowed to zero). The tracked error is used in place of
    estimate - x0 when the state carries one.

    Examples
    --------
    >>> from fadeloop import ScalarCodecState, encode
    >>> encode(ScalarCodecState.initial(4.), 2., 1.)
    1.0
    >>> encode(ScalarCodecState(0.5, 0.25, 1, 1.), 0., 1.)
    1.0
    >>> encode(ScalarCodecState(1e-155, 1e-310, 9, 1.), 0., 1.)
    1.0

    """
    if state.step == 0:
        return _value(np.sqrt(P / state.prior_var) * x0)
    v = np.asarray(state.cond_error_var, dtype=float)
    error = state.error if state.tracks_error else state.estimate - x0
    positive = v > 0.
    scale = np.sqrt(P) / np.sqrt(np.where(positive, v, 1.))
    return _value(np.where(positive, scale * error, 0.))

def decode_update(state, r, g, P, noise_var):
    """
    Return the codec state after the decoder observes channel output `r`
    and fade `g`.

    At step 0 the estimate is sqrt(prior_var / P) * r and the tracked
    variance is ((g - 1)^2 + noise_var / P) * prior_var. Afterwards the
    estimate moves against the innovation with gain
    g sqrt(P v) / (noise_var + g^2 P) and the variance contracts by
    noise_var / (noise_var + g^2 P). A zero received power leaves the state
    unchanged apart from the step count. A tracked error moves with the
    estimate.

    Examples
    --------
    >>> from fadeloop import ScalarCodecState, decode_update
    >>> state = decode_update(ScalarCodecState(1., 1., 1, 1.), 2., 1., 1., 1.)
    >>> state.estimate, state.cond_error_var, state.step
    (0.0, 0.5, 2)
    >>> decode_update(state, 2., 0., 1., 1.).cond_error_var
    0.5

    """
    if not np.isfinite(r).all(): raise ChannelOverflow()
    prior_var = state.prior_var
    step = state.step
    error = state.error
    if P == 0.:
        return ScalarCodecState(state.estimate, state.cond_error_var, step + 1, prior_var, error)
    g = np.asarray(g, dtype=float)
    if step == 0:
        estimate = np.sqrt(prior_var / P) * r
        v = ((g - 1.) ** 2 + noise_var / P) * prior_var
        if error is not None: error = error + (estimate - state.estimate)
    else:
        v = state.cond_error_var
        received = g * g * P
        denominator = noise_var + received
        active = denominator > 0.
        denominator = np.where(active, denominator, 1.)
        gain = np.where(active, g * np.sqrt(P * v) / denominator, 0.)
        estimate = state.estimate - gain * r
        if error is not None: error = error - gain * r
        v = np.where(active, v * noise_var / denominator, v)
    return ScalarCodecState(estimate, v, step + 1, prior_var, error)

# %% Time division schedule

def proportional_shares(log_abs_eigs):
    """
    Return target shares proportional to the log-magnitudes of the
    eigenvalues; equal shares if all log-magnitudes are zero.

    Examples
    --------
    >>> from fadeloop import proportional_shares
    >>> proportional_shares([0.3, 0.1])
    array([0.75, 0.25])

    """
    L = np.asarray(log_abs_eigs, dtype=float)
    if L.ndim != 1 or not L.size: raise DimensionError('log-magnitudes must be a nonempty vector')
    if (L < 0.).any(): raise ValueError('log-magnitudes must be nonnegative')
    total = L.sum()
    return L / total if total > 0. else np.full(L.size, 1. / L.size)

def _interleave(counts, period):
    # Smooth weighted round-robin; ties go to the lower index.
    current = np.zeros(len(counts), dtype=int)
    counts = np.array(counts, dtype=int)
    owners = []
    for _ in range(period):
        current += counts
        index = int(np.argmax(current))
        current[index] -= period
        owners.append(index)
    return owners

def make_schedule(alphas, period):
    """
    Return a Schedule object with `period` slots apportioned to the target
    shares `alphas` by the largest-remainder rule, with ties resolved in
    favor of the lower coordinate index. Every coordinate with a positive
    share owns at least one slot.

    Examples
    --------
    >>> from fadeloop import make_schedule
    >>> make_schedule([0.5, 0.5], 4).slot_counts
    (2, 2)
    >>> make_schedule([1.], 1).slot_counts
    (1,)
    >>> make_schedule([0.5, 0.25, 0.25], 2)
    Traceback (most recent call last):
    ScheduleError: period too short

    """
    alphas = np.asarray(alphas, dtype=float)
    period = int(period)
    if alphas.ndim != 1 or not alphas.size:
        raise ScheduleError('alphas must be a nonempty vector')
    if not np.isfinite(alphas).all() or (alphas < 0.).any():
        raise ScheduleError('alphas must be nonnegative')
    total = alphas.sum()
    if abs(total - 1.) > share_tolerance:
        raise ScheduleError(f'alphas must sum to 1, not {total:.12g}')
    if period < 1:
        raise ScheduleError(f'period must be a positive integer, not {period}')
    positive = alphas > 0.
    if period < positive.sum(): raise ScheduleError('period too short')
    quotas = alphas * period
    counts = np.floor(quotas).astype(int)
    remainders = quotas - counts
    leftover = period - counts.sum()
    order = sorted(range(alphas.size), key=lambda i: (-remainders[i], i))
    for i in order[:leftover]: counts[i] += 1
    for i in np.flatnonzero(positive & (counts == 0)):
        donor = int(np.argmax(counts))
        counts[donor] -= 1
        counts[i] += 1
        warn(f'coordinate {i} received no slot by largest remainder; '
             f'a slot was moved from coordinate {donor}', RuntimeWarning, stacklevel=2)
    return Schedule(period, _interleave(counts, period), alphas)

# %% Vector rounds

def vector_step(state, x0, channel, fade, noise):
    """
    Return the codec state after one channel use with the given fade and
    noise, together with the channel input. `x0` holds the coordinates of
    the initial state along its last axis.

    """
    index = state.owner
    coordinate = state.coordinates[index]
    x0 = np.asarray(x0, dtype=float)
    s = encode(coordinate, x0[..., index], channel.power)
    r = fade * s + noise
    coordinate = decode_update(coordinate, r, fade, channel.power, channel.noise_var)
    return state.replace(index, coordinate), s

def vector_round(state, x0, channel, rng):
    """
    Return the codec state after one channel use of a single trial: the
    coordinate owning the slot encodes its error, the input crosses the
    channel and the decoder refines that coordinate only.

    Examples
    --------
    >>> from fadeloop import (ChannelParams, FadingDistribution, RngStream,
    ...                       VectorCodecState, make_schedule, vector_round)
    >>> channel = ChannelParams(1., 0., FadingDistribution.point_mass(1.))
    >>> state = VectorCodecState.initial([1., 1.], make_schedule([0.5, 0.5], 2))
    >>> rng = RngStream(0)
    >>> for _ in range(2): state = vector_round(state, [0.5, -2.], channel, rng)
    >>> state.estimates
    array([ 0.5, -2. ])

    """
    if not isinstance(channel, ChannelParams):
        raise ValueError(f"channel must be a 'ChannelParams' object, not a '{type(channel).__name__}'")
    index = state.owner
    coordinate = state.coordinates[index]
    s = encode(coordinate, float(x0[index]), channel.power)
    r, g = transmit(channel, s, rng)
    coordinate = decode_update(coordinate, r, g, channel.power, channel.noise_var)
    return state.replace(index, coordinate)
