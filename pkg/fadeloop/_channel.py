# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
This module contains the memoryless power constrained fading channel,
r = g * s + n, where the fade g is drawn i.i.d. from a finite law and
disclosed to the receiver after each use, and n is white Gaussian noise.

Capacities of single channel uses are expressed in nats here; all
capacities in :mod:`fadeloop.capacity` are expressed in bits.

"""
import numpy as np
from math import sqrt, log, isfinite
from numpy.random import Generator, PCG64, SeedSequence
from .exceptions import InvalidDistribution, InvalidChannel, InfiniteCapacity
from .units_of_measure import convert_information
from .utils import read_only, setfrozen, repr_kwargs
from . import functional as fn

__all__ = (
    'FadingDistribution',
    'ChannelParams',
    'RngStream',
    'sample_fade',
    'sample_fades',
    'sample_noise',
    'transmit',
    'instantaneous_capacity',
)

#: Tolerance on the sum of probabilities of a fading law.
probability_tolerance = 1e-12

@read_only
class FadingDistribution:
    """
    Create a FadingDistribution object that defines the finite discrete law
    of the i.i.d. fading gain of the channel.

    Parameters
    ----------
    atoms : Iterable[tuple[float, float]]
        Pairs of gain and probability.

    Examples
    --------
    >>> from fadeloop import FadingDistribution
    >>> FadingDistribution([(0., 0.25), (1., 0.75)])
    FadingDistribution([(0, 0.25), (1, 0.75)])
    >>> FadingDistribution.bernoulli(0.5).mean
    0.5
    >>> FadingDistribution([(1., 0.5)])
    Traceback (most recent call last):
    InvalidDistribution: probabilities must sum to 1, not 0.5

    """
    __slots__ = ('gains', 'probabilities', 'cdf')

    def __init__(self, atoms):
        atoms = [(float(g), float(p)) for g, p in atoms]
        if not atoms: raise InvalidDistribution('fading law must have at least one atom')
        gains = np.array([i for i, _ in atoms])
        probabilities = np.array([i for _, i in atoms])
        if not np.isfinite(gains).all():
            raise InvalidDistribution('gains must be finite')
        if not np.isfinite(probabilities).all() or (probabilities < 0.).any():
            raise InvalidDistribution('probabilities must be nonnegative')
        total = probabilities.sum()
        if abs(total - 1.) > probability_tolerance:
            raise InvalidDistribution(f'probabilities must sum to 1, not {total:.12g}')
        cdf = np.cumsum(probabilities)
        for i in (gains, probabilities, cdf): i.setflags(write=False)
        setfrozen(self, 'gains', gains)
        setfrozen(self, 'probabilities', probabilities)
        setfrozen(self, 'cdf', cdf)

    @classmethod
    def point_mass(cls, gain):
        """Return a fading law that always yields `gain`."""
        return cls([(gain, 1.)])

    @classmethod
    def bernoulli(cls, failure_probability):
        """
        Return a fading law that erases the channel input (g = 0) with
        probability `failure_probability` and passes it (g = 1) otherwise.

        """
        epsilon = float(failure_probability)
        if not 0. <= epsilon <= 1.:
            raise InvalidDistribution(f'failure probability must be in [0, 1], not {epsilon}')
        return cls([(0., epsilon), (1., 1. - epsilon)])

    @property
    def atoms(self):
        """list[tuple[float, float]] Pairs of gain and probability."""
        return [(float(g), float(p)) for g, p in zip(self.gains, self.probabilities)]

    @property
    def mean(self):
        """[float] Mean of the gain."""
        return float(fn.expectation(self.probabilities, self.gains))

    @property
    def variance(self):
        """[float] Variance of the gain."""
        mean = self.mean
        return max(float(fn.expectation(self.probabilities, self.gains * self.gains)) - mean * mean, 0.)

    @property
    def erasure_probability(self):
        """[float] Probability that the gain is zero."""
        return float(self.probabilities[self.gains == 0.].sum())

    def has_constant_power_gain(self):
        """Return whether g^2 is the same for all atoms of positive probability."""
        squares = (self.gains * self.gains)[self.probabilities > 0.]
        return bool((squares == squares[0]).all())

    def sample(self, rng, size=None):
        """
        Return fade(s) drawn from the fading stream of `rng`. Sampling an
        array of fades draws the same sequence as repeated scalar draws.

        """
        u = rng.fade.random(size)
        index = np.searchsorted(self.cdf, u, side='right')
        index = np.minimum(index, self.gains.size - 1)
        return self.gains[index] if size is not None else float(self.gains[index])

    def __eq__(self, other):
        return (isinstance(other, FadingDistribution)
                and np.array_equal(self.gains, other.gains)
                and np.array_equal(self.probabilities, other.probabilities))

    def __hash__(self):
        return hash((self.gains.tobytes(), self.probabilities.tobytes()))

    def __repr__(self):
        atoms = ', '.join([f"({g:.6g}, {p:.6g})" for g, p in self.atoms])
        return f"{type(self).__name__}([{atoms}])"


@read_only
class ChannelParams:
    """
    Create a ChannelParams object that defines a power constrained fading
    channel.

    Parameters
    ----------
    power : float
        Average transmit power budget, P.
    noise_var : float
        Variance of the additive white Gaussian noise.
    fading : FadingDistribution
        Law of the i.i.d. fading gain.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution
    >>> params = ChannelParams(1., 1., FadingDistribution.bernoulli(0.5))
    >>> params
    ChannelParams(power=1, noise_var=1, fading=FadingDistribution([(0, 0.5), (1, 0.5)]))
    >>> params.contraction_factors()
    array([1. , 0.5])

    """
    __slots__ = ('power', 'noise_var', 'fading')

    def __init__(self, power, noise_var, fading):
        power = float(power)
        noise_var = float(noise_var)
        if not (isfinite(power) and power >= 0.):
            raise InvalidChannel(f'power must be finite and nonnegative, not {power}')
        if not (isfinite(noise_var) and noise_var >= 0.):
            raise InvalidChannel(f'noise variance must be finite and nonnegative, not {noise_var}')
        if not isinstance(fading, FadingDistribution):
            raise InvalidChannel(f"fading must be a 'FadingDistribution' object, not a '{type(fading).__name__}'")
        if noise_var == 0. and not fading.gains[fading.probabilities > 0.].any():
            raise InvalidChannel('noiseless channel cannot have a fading law concentrated at zero gain')
        setfrozen(self, 'power', power)
        setfrozen(self, 'noise_var', noise_var)
        setfrozen(self, 'fading', fading)

    @property
    def noiseless(self):
        """[bool] Whether the channel has no additive noise."""
        return self.noise_var == 0.

    def copy(self, **kwargs):
        """Return a copy with the given parameters replaced."""
        data = dict(power=self.power, noise_var=self.noise_var, fading=self.fading)
        data.update(kwargs)
        return type(self)(**data)

    def contraction_factors(self, power=None):
        """Return the error variance contraction of each fading atom."""
        return fn.contraction_factors(self.fading.gains, self.power if power is None else power, self.noise_var)

    def __eq__(self, other):
        return (isinstance(other, ChannelParams)
                and self.power == other.power
                and self.noise_var == other.noise_var
                and self.fading == other.fading)

    def __hash__(self):
        return hash((self.power, self.noise_var, self.fading))

    def __repr__(self):
        return f"{type(self).__name__}({repr_kwargs(dict(power=self.power, noise_var=self.noise_var, fading=self.fading))})"


class RngStream:
    """
    Create an RngStream object, a seeded source of randomness identified by
    a master seed and a stream index. Fades, noise samples and prior draws
    come from three independent generators spawned from the same seed
    sequence, so drawing blocks of samples reproduces repeated scalar draws.

    Parameters
    ----------
    master_seed : int
        Nonnegative 64-bit seed shared by all streams of a run.
    stream_index : int
        Nonnegative 64-bit index of the stream (e.g., the trial index).

    Examples
    --------
    >>> from fadeloop import RngStream
    >>> a = RngStream(42, 0).noise.standard_normal(3)
    >>> b = RngStream(42, 0).noise.standard_normal(3)
    >>> bool((a == b).all())
    True

    """
    __slots__ = ('master_seed', 'stream_index', 'fade', 'noise', 'prior')

    def __init__(self, master_seed, stream_index=0):
        master_seed = int(master_seed)
        stream_index = int(stream_index)
        for name, value in (('master seed', master_seed), ('stream index', stream_index)):
            if not 0 <= value < 2**64:
                raise ValueError(f'{name} must be a nonnegative 64-bit integer, not {value}')
        self.master_seed = master_seed
        self.stream_index = stream_index
        sequence = SeedSequence(master_seed, spawn_key=(stream_index,))
        self.fade, self.noise, self.prior = [Generator(PCG64(i)) for i in sequence.spawn(3)]

    def __repr__(self):
        return f"{type(self).__name__}(master_seed={self.master_seed}, stream_index={self.stream_index})"


def sample_fade(dist, rng):
    """
    Return a fade drawn from `dist`: atom g_k with probability p_k.

    Examples
    --------
    >>> from fadeloop import FadingDistribution, RngStream, sample_fade
    >>> sample_fade(FadingDistribution.point_mass(1.), RngStream(0))
    1.0

    """
    return dist.sample(rng)

def sample_fades(dist, rng, size):
    """Return an array of `size` fades drawn from `dist`."""
    return dist.sample(rng, size)

def sample_noise(params, rng, size=None):
    """Return Gaussian channel noise with variance `params.noise_var`."""
    sigma = sqrt(params.noise_var)
    if size is None:
        return sigma * float(rng.noise.standard_normal())
    else:
        return sigma * rng.noise.standard_normal(size)

def transmit(params, s, rng, fade=None, noise=None):
    """
    Transmit `s` through the channel and return the channel output and
    the fade, which the receiver observes.

    Parameters
    ----------
    params : ChannelParams
    s : float
        Channel input.
    rng : RngStream
    fade : float, optional
        Forced fade; defaults to a draw from the fading law.
    noise : float, optional
        Forced noise sample; defaults to a Gaussian draw.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, RngStream, transmit
    >>> params = ChannelParams(1., 1., FadingDistribution.bernoulli(0.5))
    >>> r, g = transmit(params, 1., RngStream(0), fade=0.5, noise=0.1)
    >>> round(r, 12), g
    (0.6, 0.5)

    """
    s = float(s)
    if not isfinite(s): raise ValueError(f'channel input must be finite, not {s}')
    g = sample_fade(params.fading, rng) if fade is None else float(fade)
    n = sample_noise(params, rng) if noise is None else float(noise)
    return g * s + n, g

def instantaneous_capacity(params, g, units='nat'):
    """
    Return the Shannon capacity of a single channel use with fade `g`,
    1/2 ln(1 + g^2 P / noise_var), in nats by default.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, instantaneous_capacity
    >>> params = ChannelParams(3., 1., FadingDistribution.point_mass(1.))
    >>> instantaneous_capacity(params, 1.)
    0.693147...
    >>> instantaneous_capacity(params, 1., units='bit')
    1.0

    """
    if params.noise_var == 0.: raise InfiniteCapacity()
    g = float(g)
    value = 0.5 * log(1. + g * g * params.power / params.noise_var)
    return convert_information(value, 'nat', units)
