# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
"""
if __name__ == '__main__':
    import os
    os.environ["NUMBA_DISABLE_JIT"] = "1"
import pytest
import numpy as np
import fadeloop as fl
from math import log, sqrt
from numpy.testing import assert_allclose
from fadeloop.exceptions import InvalidDistribution, InvalidChannel, InfiniteCapacity, DimensionError

def test_fading_distribution():
    dist = fl.FadingDistribution([(0., 0.2), (0.5, 0.3), (2., 0.5)])
    assert_allclose(dist.mean, 0.15 + 1.)
    assert_allclose(dist.variance, 0.3 * 0.25 + 0.5 * 4 - 1.15 ** 2)
    assert dist.erasure_probability == 0.2
    assert not dist.has_constant_power_gain()
    assert fl.FadingDistribution([(-1., 0.5), (1., 0.5)]).has_constant_power_gain()
    assert fl.FadingDistribution.bernoulli(0.3).atoms == [(0., 0.3), (1., 0.7)]
    assert fl.FadingDistribution.bernoulli(0.3) == fl.FadingDistribution([(0, 0.3), (1, 0.7)])
    assert hash(fl.FadingDistribution.point_mass(1.)) == hash(fl.FadingDistribution([(1., 1.)]))
    with pytest.raises(InvalidDistribution):
        fl.FadingDistribution([])
    with pytest.raises(InvalidDistribution):
        fl.FadingDistribution([(1., 0.6), (0., 0.6)])
    with pytest.raises(InvalidDistribution):
        fl.FadingDistribution([(1., 1.2), (0., -0.2)])
    with pytest.raises(InvalidDistribution):
        fl.FadingDistribution([(np.inf, 1.)])
    with pytest.raises(InvalidDistribution):
        fl.FadingDistribution.bernoulli(1.5)
    # Within tolerance
    fl.FadingDistribution([(1., 0.5), (0., 0.5 + 1e-13)])

def test_channel_params():
    dist = fl.FadingDistribution.bernoulli(0.5)
    params = fl.ChannelParams(1., 1., dist)
    assert params == fl.ChannelParams(1, 1, fl.FadingDistribution.bernoulli(0.5))
    assert params.copy(power=2.).power == 2.
    assert not params.noiseless
    assert fl.ChannelParams(1., 0., dist).noiseless
    assert_allclose(params.contraction_factors(), [1., 0.5])
    assert_allclose(params.contraction_factors(power=3.), [1., 0.25])
    with pytest.raises(InvalidChannel):
        fl.ChannelParams(-1., 1., dist)
    with pytest.raises(InvalidChannel):
        fl.ChannelParams(1., np.nan, dist)
    with pytest.raises(InvalidChannel):
        fl.ChannelParams(1., 0., fl.FadingDistribution.point_mass(0.))
    with pytest.raises(InvalidChannel):
        fl.ChannelParams(1., 1., 0.5)
    with pytest.raises(TypeError):
        params.power = 2.

def test_rng_stream_reproducibility():
    a = fl.RngStream(42, 7)
    b = fl.RngStream(42, 7)
    c = fl.RngStream(42, 8)
    dist = fl.FadingDistribution.bernoulli(0.5)
    assert (fl.sample_fades(dist, a, 100) == fl.sample_fades(dist, b, 100)).all()
    assert (a.noise.standard_normal(100) == b.noise.standard_normal(100)).all()
    assert not (c.noise.standard_normal(100) == fl.RngStream(42, 7).noise.standard_normal(100)).all()
    with pytest.raises(ValueError):
        fl.RngStream(-1)
    with pytest.raises(ValueError):
        fl.RngStream(0, 2**64)

def test_block_draws_match_scalar_draws():
    dist = fl.FadingDistribution([(0., 0.2), (0.5, 0.3), (2., 0.5)])
    params = fl.ChannelParams(1., 2., dist)
    block = fl.RngStream(3, 1)
    scalar = fl.RngStream(3, 1)
    fades = fl.sample_fades(dist, block, 50)
    noises = fl.sample_noise(params, block, 50)
    for g, n in zip(fades, noises):
        assert fl.sample_fade(dist, scalar) == g
        assert fl.sample_noise(params, scalar) == n

def test_sample_fade():
    rng = fl.RngStream(0)
    assert fl.sample_fade(fl.FadingDistribution.point_mass(1.), rng) == 1.
    assert fl.sample_fade(fl.FadingDistribution.bernoulli(0.), rng) == 1.
    assert (fl.sample_fades(fl.FadingDistribution.bernoulli(1.), rng, 1000) == 0.).all()
    N = 10**6
    fades = fl.sample_fades(fl.FadingDistribution.bernoulli(0.5), fl.RngStream(1), N)
    frequency = (fades == 0.).mean()
    assert abs(frequency - 0.5) < 3 * sqrt(0.25 / N)

def test_transmit():
    dist = fl.FadingDistribution.point_mass(1.)
    rng = fl.RngStream(0)
    r, g = fl.transmit(fl.ChannelParams(1., 1., dist), 1., rng, fade=0.5, noise=0.1)
    assert_allclose(r, 0.6)
    assert g == 0.5
    identity = fl.ChannelParams(1., 0., dist)
    for x in (-3.2, 0., 1e6):
        r, g = fl.transmit(identity, x, rng)
        assert r == x and g == 1.
    with pytest.raises(ValueError):
        fl.transmit(identity, np.inf, rng)

def test_noise_moments():
    N = 10**5
    noise_var = 2.5
    params = fl.ChannelParams(1., noise_var, fl.FadingDistribution.bernoulli(0.5))
    rng = fl.RngStream(11)
    r = np.array([fl.transmit(params, 0., rng)[0] for _ in range(N)])
    assert abs(r.mean()) < 3 * sqrt(noise_var / N)
    # Standard error of the sample variance of Gaussian samples
    assert abs(r.var(ddof=1) - noise_var) < 3 * noise_var * sqrt(2. / (N - 1))

def test_instantaneous_capacity():
    params = fl.ChannelParams(1., 1., fl.FadingDistribution.point_mass(1.))
    assert fl.instantaneous_capacity(params, 0.) == 0.
    assert_allclose(fl.instantaneous_capacity(params, 1.), 0.5 * log(2.))
    assert_allclose(fl.instantaneous_capacity(params.copy(power=3.), 1.), log(2.))
    assert_allclose(fl.instantaneous_capacity(params.copy(power=3.), 1., units='bits'), 1.)
    with pytest.raises(InfiniteCapacity, match='infinite capacity'):
        fl.instantaneous_capacity(params.copy(noise_var=0.), 1.)
    with pytest.raises(DimensionError):
        fl.instantaneous_capacity(params, 1., units='m')

if __name__ == '__main__':
    test_fading_distribution()
    test_channel_params()
    test_rng_stream_reproducibility()
    test_block_draws_match_scalar_draws()
    test_sample_fade()
    test_transmit()
    test_noise_moments()
    test_instantaneous_capacity()
