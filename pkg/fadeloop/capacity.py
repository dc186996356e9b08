# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
This module contains exact evaluations of channel capacities and of the
mean square stabilizability conditions of scalar and vector plants over a
power constrained fading channel.

All capacities are in bits per channel use and all eigenvalue magnitudes
are given as base-2 logarithms. Expectations over the fading law are exact
finite sums.

"""
import numpy as np
import flexsolve as flx
from math import log2, inf, isfinite
from itertools import product
from ._channel import ChannelParams, FadingDistribution
from .exceptions import InfiniteCapacity, InfeasibleRegion, DimensionError
from .utils import read_only, setfrozen, repr_kwargs
from . import functional as fn

__all__ = (
    'SpectrumSpec',
    'CapacityReport',
    'expected_contraction',
    'mean_square_capacity',
    'shannon_capacity',
    'linear_ms_capacity',
    'bernoulli_shannon_capacity',
    'bernoulli_mean_square_capacity',
    'bernoulli_linear_capacity',
    'scalar_stabilizable',
    'vector_sufficient',
    'necessity_bounds',
    'vector_necessary',
    'capacity_report',
    'region_label',
    'schedule_growth_rates',
    'schedule_growth_rate',
    'schedule_stabilizable',
    'critical_erasure_probability',
    'minimum_power',
    'SUFFICIENT', 'GAP', 'EXCLUDED',
)

#: Point satisfies the sufficient condition.
SUFFICIENT = 'SUFFICIENT'

#: Point satisfies the necessary conditions but not the sufficient one.
GAP = 'GAP'

#: Point violates a necessary condition.
EXCLUDED = 'EXCLUDED'

# %% Spectrum of the open-loop system

@read_only
class SpectrumSpec:
    """
    Create a SpectrumSpec object that describes the unstable modes of the
    real Jordan form of a system matrix.

    Parameters
    ----------
    modes : Iterable[tuple[float, int, int]]
        Triples of log2|lambda_i| (nonnegative), algebraic multiplicity m_i,
        and real flag a_i (1 for a real eigenvalue, 2 for a complex pair).

    Examples
    --------
    >>> from fadeloop import SpectrumSpec
    >>> spec = SpectrumSpec([(0.25, 1, 1), (0.125, 2, 2)])
    >>> spec.weighted_sum
    0.75
    >>> SpectrumSpec.real_simple([0.0704, 0.0704]).dimension
    2

    """
    __slots__ = ('log_abs_eigs', 'multiplicities', 'real_flags')

    def __init__(self, modes):
        modes = [(float(L), int(m), int(a)) for L, m, a in modes]
        if not modes: raise DimensionError('spectrum must have at least one mode')
        for L, m, a in modes:
            if not (isfinite(L) and L >= 0.):
                raise ValueError(f'log-magnitude of unstable eigenvalues must be finite and nonnegative, not {L}')
            if m < 1:
                raise ValueError(f'multiplicity must be a positive integer, not {m}')
            if a not in (1, 2):
                raise ValueError(f'real flag must be 1 (real) or 2 (complex pair), not {a}')
        log_abs_eigs = np.array([i[0] for i in modes])
        multiplicities = np.array([i[1] for i in modes], dtype=int)
        real_flags = np.array([i[2] for i in modes], dtype=int)
        for i in (log_abs_eigs, multiplicities, real_flags): i.setflags(write=False)
        setfrozen(self, 'log_abs_eigs', log_abs_eigs)
        setfrozen(self, 'multiplicities', multiplicities)
        setfrozen(self, 'real_flags', real_flags)

    @classmethod
    def real_simple(cls, log_abs_eigs):
        """Return a spectrum of real eigenvalues of multiplicity one."""
        return cls([(i, 1, 1) for i in log_abs_eigs])

    @classmethod
    def from_eigenvalues(cls, eigenvalues, tol=1e-9):
        """
        Return the spectrum of the given eigenvalues, grouping equal values
        into one mode and complex conjugates into one complex-pair mode.

        Examples
        --------
        >>> SpectrumSpec.from_eigenvalues([2., 2., 2j, -2j]).modes
        [(1.0, 2, 1), (1.0, 1, 2)]

        """
        eigenvalues = np.asarray(eigenvalues, dtype=complex)
        groups = []
        for value in eigenvalues:
            if value.imag < -tol: continue # Conjugate of a listed pair
            for group in groups:
                if abs(group[0] - value) <= tol * max(1., abs(value)):
                    group[1] += 1
                    break
            else:
                groups.append([value, 1])
        modes = []
        for value, m in groups:
            magnitude = abs(value)
            if magnitude < 1. - tol:
                raise ValueError(f'all eigenvalues must be unstable; |{value:.6g}| < 1')
            L = log2(magnitude) if magnitude > 1. else 0.
            modes.append((L, m, 1 if abs(value.imag) <= tol else 2))
        return cls(modes)

    @property
    def modes(self):
        """list[tuple[float, int, int]] Triples of (log2|lambda_i|, m_i, a_i)."""
        return [(float(L), int(m), int(a)) for L, m, a in
                zip(self.log_abs_eigs, self.multiplicities, self.real_flags)]

    @property
    def mu(self):
        """[1d array] Real dimension of each Jordan block, a_i * m_i."""
        return self.real_flags * self.multiplicities

    @property
    def dimension(self):
        """[int] Dimension of the state."""
        return int(self.mu.sum())

    @property
    def weighted_sum(self):
        """[float] Sum of a_i * m_i * log2|lambda_i| over all modes."""
        return float(fn.expectation(self.mu.astype(float), self.log_abs_eigs))

    def __repr__(self):
        modes = ', '.join([f"({L:.6g}, {m}, {a})" for L, m, a in self.modes])
        return f"{type(self).__name__}([{modes}])"


@read_only
class CapacityReport:
    """
    Create a CapacityReport object that bundles the Shannon capacity, the
    mean square capacity with causal coding, the mean square capacity with
    linear coding (all in bits per channel use), and the expected error
    variance contraction of one channel use.

    """
    __slots__ = ('c_shannon', 'c_msc', 'c_msl', 'contraction')

    def __init__(self, c_shannon, c_msc, c_msl, contraction):
        setfrozen(self, 'c_shannon', float(c_shannon))
        setfrozen(self, 'c_msc', float(c_msc))
        setfrozen(self, 'c_msl', float(c_msl))
        setfrozen(self, 'contraction', float(contraction))

    def to_dict(self):
        """Return a dictionary with the keys of the JSON report."""
        return {'shannon_bits': self.c_shannon,
                'msc_bits': self.c_msc,
                'msl_bits': self.c_msl,
                'contraction': self.contraction}

    def __iter__(self):
        return iter((self.c_shannon, self.c_msc, self.c_msl, self.contraction))

    def __repr__(self):
        return f"{type(self).__name__}({repr_kwargs(dict(c_shannon=self.c_shannon, c_msc=self.c_msc, c_msl=self.c_msl, contraction=self.contraction))})"

# %% Capacities

def _check_noisy(params):
    if params.noise_var == 0.: raise InfiniteCapacity()

def _contraction(params):
    # Also valid in the noiseless limit, where it is the probability of a
    # zero received power.
    return float(fn.expectation(params.fading.probabilities, params.contraction_factors()))

def _capacity_from_contraction(rho):
    if rho <= 0.: return inf
    value = -0.5 * log2(rho)
    return value if value > 0. else 0.

def expected_contraction(params):
    """
    Return the expected error variance contraction of one channel use,
    E{noise_var / (noise_var + g^2 P)}.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, expected_contraction
    >>> expected_contraction(ChannelParams(1., 1., FadingDistribution.bernoulli(0.5)))
    0.75

    """
    _check_noisy(params)
    return _contraction(params)

def mean_square_capacity(params):
    """
    Return the mean square capacity of the channel with causal
    encoders/decoders, -1/2 log2 E{noise_var / (noise_var + g^2 P)}, in bits.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, mean_square_capacity
    >>> mean_square_capacity(ChannelParams(1., 1., FadingDistribution.bernoulli(0.5)))
    0.2075187496...

    """
    return _capacity_from_contraction(expected_contraction(params))

def shannon_capacity(params):
    """
    Return the Shannon capacity of the channel with receiver side fade
    knowledge, E{1/2 log2(1 + g^2 P / noise_var)}, in bits.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, shannon_capacity
    >>> shannon_capacity(ChannelParams(1., 1., FadingDistribution.bernoulli(0.5)))
    0.25

    """
    _check_noisy(params)
    fading = params.fading
    return float(fn.expectation(fading.probabilities, fn.snr_capacities(fading.gains, params.power, params.noise_var)))

def linear_ms_capacity(params):
    """
    Return the mean square capacity of the channel with linear
    encoders/decoders, 1/2 log2(1 + mu_g^2 P / (var_g P + noise_var)), in bits.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, linear_ms_capacity
    >>> linear_ms_capacity(ChannelParams(1., 1., FadingDistribution.bernoulli(0.5)))
    0.1315172029...

    """
    _check_noisy(params)
    fading = params.fading
    P = params.power
    mean = fading.mean
    return 0.5 * log2(1. + mean * mean * P / (fading.variance * P + params.noise_var))

def bernoulli_shannon_capacity(epsilon, power, noise_var):
    """Return the Shannon capacity [bits] of a Bernoulli fading channel in closed form."""
    return 0.5 * (1. - epsilon) * log2(1. + power / noise_var)

def bernoulli_mean_square_capacity(epsilon, power, noise_var):
    """Return the mean square capacity [bits] of a Bernoulli fading channel in closed form."""
    return -0.5 * log2((noise_var + epsilon * power) / (noise_var + power))

def bernoulli_linear_capacity(epsilon, power, noise_var):
    """Return the linear mean square capacity [bits] of a Bernoulli fading channel in closed form."""
    success = 1. - epsilon
    return 0.5 * log2(1. + success * success * power / (success * epsilon * power + noise_var))

def capacity_report(params):
    """
    Return a CapacityReport object of the channel.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, capacity_report
    >>> capacity_report(ChannelParams(1., 1., FadingDistribution.bernoulli(0.5)))
    CapacityReport(c_shannon=0.25, c_msc=0.207519, c_msl=0.131517, contraction=0.75)

    """
    rho = expected_contraction(params)
    return CapacityReport(shannon_capacity(params),
                          _capacity_from_contraction(rho),
                          linear_ms_capacity(params),
                          rho)

# %% Stabilizability conditions

def _mean_square_capacity_limit(params):
    # Infinite when the channel is noiseless and never fades to zero.
    return _capacity_from_contraction(_contraction(params))

def _linear_capacity_limit(params):
    # Infinite when the received power is deterministic and noiseless.
    fading = params.fading
    P = params.power
    mean = fading.mean
    denominator = fading.variance * P + params.noise_var
    signal = mean * mean * P
    if denominator == 0.: return inf if signal > 0. else 0.
    return 0.5 * log2(1. + signal / denominator)

def scalar_stabilizable(log_abs_lambda, params):
    """
    Return whether a scalar plant with log2|lambda| = `log_abs_lambda` is
    mean square stabilizable over the channel, log2|lambda| < C_MSC.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, scalar_stabilizable
    >>> from math import log2
    >>> params = ChannelParams(1., 1., FadingDistribution.bernoulli(0.5))
    >>> scalar_stabilizable(log2(1.1), params), scalar_stabilizable(log2(1.2), params)
    (True, False)

    """
    if log_abs_lambda < 0.:
        raise ValueError(f'log-magnitude of an unstable eigenvalue must be nonnegative, not {log_abs_lambda}')
    return log_abs_lambda < _mean_square_capacity_limit(params)

def vector_sufficient(spec, params):
    """
    Return whether the sufficient condition for mean square stabilizability
    holds, sum_i a_i m_i log2|lambda_i| < C_MSC.

    """
    return spec.weighted_sum < _mean_square_capacity_limit(params)

def necessity_bounds(spec, params):
    """
    Return the family of necessary conditions as a list of pairs
    (coefficients, bound), each stating coefficients @ log_abs_eigs < bound.

    For every tuple (v_1, ..., v_d) with v_i in {0, ..., m_i}, not all zero,
    the coefficients are a_i * v_i and the bound is
    -(v/2) log2 E{(noise_var / (noise_var + g^2 P))**(1/v)}, v = sum_i a_i v_i.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, SpectrumSpec, necessity_bounds
    >>> params = ChannelParams(1., 1., FadingDistribution.bernoulli(0.8))
    >>> for coefficients, bound in necessity_bounds(SpectrumSpec.real_simple([0., 0.]), params):
    ...     print(coefficients, round(bound, 4))
    [0 1] 0.076
    [1 0] 0.076
    [1 1] 0.0871

    """
    probabilities = params.fading.probabilities
    rhos = params.contraction_factors()
    real_flags = spec.real_flags
    bounds = []
    cache = {}
    for vs in product(*[range(m + 1) for m in spec.multiplicities]):
        vs = np.array(vs, dtype=int)
        if not vs.any(): continue
        coefficients = real_flags * vs
        v = int(coefficients.sum())
        if v in cache:
            bound = cache[v]
        else:
            moment = float(fn.powered_expectation(probabilities, rhos, 1. / v))
            bound = cache[v] = inf if moment <= 0. else max(-0.5 * v * log2(moment), 0.)
        bounds.append((coefficients, bound))
    return bounds

def vector_necessary(spec, params):
    """
    Return whether all necessary conditions for mean square
    stabilizability hold (see `necessity_bounds`).

    """
    L = spec.log_abs_eigs
    return all([coefficients @ L < bound for coefficients, bound in necessity_bounds(spec, params)])

def region_label(log_abs_eigs, params):
    """
    Return the label of a plant with real simple eigenvalues, one of
    SUFFICIENT, GAP (necessary conditions hold, sufficient fails) or
    EXCLUDED (a necessary condition fails), and whether the plant is
    stabilizable with linear encoders/decoders (sum_i log2|lambda_i| < C_MSL).

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, region_label
    >>> params = ChannelParams(1., 1., FadingDistribution.bernoulli(0.8))
    >>> region_label([0.05, 0.05], params)
    ('EXCLUDED', False)
    >>> region_label([0.07, 0.01], params)
    ('GAP', False)
    >>> region_label([0.01, 0.01], params)
    ('SUFFICIENT', True)

    """
    spec = SpectrumSpec.real_simple(log_abs_eigs)
    if vector_sufficient(spec, params):
        label = SUFFICIENT
    elif vector_necessary(spec, params):
        label = GAP
    else:
        label = EXCLUDED
    return label, bool(spec.weighted_sum < _linear_capacity_limit(params))

def schedule_growth_rates(log_abs_eigs, alphas, params):
    """
    Return the per-step mean square growth factor of each coordinate of a
    diagonal plant served by a transmission schedule with shares `alphas`,
    lambda_i^2 * E{noise_var / (noise_var + g^2 P)}**alpha_i.

    Examples
    --------
    >>> from fadeloop import ChannelParams, FadingDistribution, schedule_growth_rates
    >>> params = ChannelParams(1., 1., FadingDistribution.bernoulli(0.5))
    >>> schedule_growth_rates([0.0704, 0.0704], [0.5, 0.5], params)
    array([0.9548..., 0.9548...])

    """
    L = np.asarray(log_abs_eigs, dtype=float)
    alphas = np.asarray(alphas, dtype=float)
    if L.shape != alphas.shape:
        raise DimensionError('log-magnitudes and shares must have the same length')
    rho = _contraction(params)
    return 2. ** (2. * L) * rho ** alphas

def schedule_growth_rate(log_abs_eigs, alphas, params):
    """Return the largest per-step mean square growth factor over all coordinates."""
    return float(schedule_growth_rates(log_abs_eigs, alphas, params).max())

def schedule_stabilizable(log_abs_eigs, alphas, params):
    """Return whether every coordinate's growth factor under the schedule is below one."""
    return bool((schedule_growth_rates(log_abs_eigs, alphas, params) < 1.).all())

# %% Thresholds

def critical_erasure_probability(log_abs_lambda, power, noise_var):
    """
    Return the largest failure probability of a Bernoulli fading channel for
    which a scalar plant is mean square stabilizable (the condition is
    strict: the plant is stabilizable for probabilities below the returned
    value). In the noiseless limit this is 1 / lambda^2.

    Examples
    --------
    >>> from fadeloop import critical_erasure_probability
    >>> critical_erasure_probability(1., 1., 0.)
    0.25

    """
    if power <= 0.: raise ValueError('power must be positive')
    epsilon = (2. ** (-2. * log_abs_lambda) * (noise_var + power) - noise_var) / power
    return min(max(epsilon, 0.), 1.)

def minimum_power(log_abs_lambda, fading, noise_var, xtol=1e-12, ytol=1e-14):
    """
    Return the transmit power at which the mean square capacity equals
    `log_abs_lambda`; a scalar plant is stabilizable for any larger power.

    Parameters
    ----------
    log_abs_lambda : float
        log2|lambda| of the plant.
    fading : FadingDistribution
        Law of the fading gain.
    noise_var : float
        Variance of the channel noise.

    Raises
    ------
    InfeasibleRegion
        If no power suffices, i.e., P(g = 0) >= 1 / lambda^2.

    Examples
    --------
    >>> from fadeloop import FadingDistribution, minimum_power
    >>> round(minimum_power(0.5, FadingDistribution.point_mass(1.), 1.), 9)
    1.0

    """
    if log_abs_lambda < 0.:
        raise ValueError(f'log-magnitude of an unstable eigenvalue must be nonnegative, not {log_abs_lambda}')
    if not isinstance(fading, FadingDistribution):
        raise ValueError(f"fading must be a 'FadingDistribution' object, not a '{type(fading).__name__}'")
    target = 2. ** (-2. * log_abs_lambda)
    floor = fading.erasure_probability
    if floor >= target:
        raise InfeasibleRegion('stabilization',
            f'no transmit power stabilizes log2|lambda|={log_abs_lambda:.6g}; '
            f'erasure probability {floor:.6g} is not below 1/lambda^2={target:.6g}')
    if log_abs_lambda == 0. or noise_var == 0.: return 0.
    probabilities = fading.probabilities
    gains = fading.gains
    f = lambda P: float(fn.expectation(probabilities, fn.contraction_factors(gains, P, noise_var))) - target
    x0 = 0.
    y0 = f(x0)
    x1 = noise_var
    y1 = f(x1)
    if y1 == 0.: return x1
    while y1 > 0.:
        x0, y0 = x1, y1
        x1 *= 2.
        y1 = f(x1)
    return flx.IQ_interpolation(f, x0, x1, y0, y1, None, xtol, ytol, (), checkiter=False)
