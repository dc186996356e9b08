# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
This module contains single input plants, x[t+1] = A x[t] + B u[t], and the
estimate-then-control law that cancels the open-loop response of the
decoder's estimate of x0,

    u[t] = K (A^t xhat[t] + sum_{i=1}^{t} A^(t-i) B u[i-1]),

with a deadbeat gain K that places all poles of A + BK at the origin.

"""
import numpy as np
from scipy import linalg
from ._settings import settings
from .capacity import SpectrumSpec
from .exceptions import UncontrollablePair, HorizonOverflow, DimensionError
from .utils import read_only, setfrozen

__all__ = (
    'PlantSpec',
    'ControllerState',
    'controllability_matrix',
    'deadbeat_gain',
    'control_inputs',
    'control_input',
)

#: Largest condition number of the controllability matrix of a
#: controllable pair.
controllability_condition_limit = 1e12

#: Tolerance on the unit magnitude of marginally stable eigenvalues.
eigenvalue_tolerance = 1e-9

@read_only
class PlantSpec:
    """
    Create a PlantSpec object that defines a single input plant whose open
    loop eigenvalues are all unstable (|lambda_i| >= 1).

    Parameters
    ----------
    A : array_like
        n x n system matrix (a scalar for n = 1).
    B : array_like
        Input vector of length n.

    Examples
    --------
    >>> from fadeloop import PlantSpec
    >>> plant = PlantSpec.diagonal([2., 3.], [1., 1.])
    >>> plant.n, plant.is_diagonal
    (2, True)
    >>> plant.spectrum()
    SpectrumSpec([(1, 1, 1), (1.58496, 1, 1)])
    >>> PlantSpec.scalar(0.5)
    Traceback (most recent call last):
    ValueError: all eigenvalues of A must be unstable; |0.5| < 1

    """
    __slots__ = ('A', 'B')

    def __init__(self, A, B):
        A = np.array(A, dtype=float, ndmin=2)
        B = np.array(B, dtype=float).ravel()
        n = B.size
        if A.shape != (n, n):
            raise DimensionError(f'A must be a {n}x{n} matrix, not {A.shape[0]}x{A.shape[1]}')
        if not (np.isfinite(A).all() and np.isfinite(B).all()):
            raise ValueError('A and B must be finite')
        for value in np.linalg.eigvals(A):
            if abs(value) < 1. - eigenvalue_tolerance:
                raise ValueError(f'all eigenvalues of A must be unstable; |{value.real if value.imag == 0 else value:.6g}| < 1')
        A.setflags(write=False)
        B.setflags(write=False)
        setfrozen(self, 'A', A)
        setfrozen(self, 'B', B)

    @classmethod
    def scalar(cls, lam, b=1.):
        """Return a scalar plant x[t+1] = lam x[t] + b u[t]."""
        return cls([[lam]], [b])

    @classmethod
    def diagonal(cls, lams, b=None):
        """Return a plant with A = diag(lams) and input vector `b` (defaults to ones)."""
        lams = np.asarray(lams, dtype=float)
        if lams.ndim != 1 or not lams.size: raise DimensionError('eigenvalues must be a nonempty vector')
        return cls(np.diag(lams), np.ones(lams.size) if b is None else b)

    @property
    def n(self):
        """[int] Dimension of the state."""
        return self.B.size

    @property
    def is_diagonal(self):
        """[bool] Whether A is diagonal (real simple eigenvalues in the state coordinates)."""
        A = self.A
        return bool((A == np.diag(np.diag(A))).all())

    @property
    def eigenvalues(self):
        """[1d array] Eigenvalues of A."""
        return np.diag(self.A).copy() if self.is_diagonal else np.linalg.eigvals(self.A)

    @property
    def log_abs_eigs(self):
        """[1d array] log2|lambda_i| of each diagonal entry (diagonal plants only)."""
        if not self.is_diagonal: raise ValueError('log-magnitudes per coordinate require a diagonal plant')
        return np.log2(np.abs(np.diag(self.A)))

    def spectrum(self):
        """Return the SpectrumSpec object of A."""
        return SpectrumSpec.from_eigenvalues(self.eigenvalues)

    def __repr__(self):
        if self.n == 1:
            return f"{type(self).__name__}.scalar({self.A[0, 0]:.6g}, b={self.B[0]:.6g})"
        elif self.is_diagonal:
            lams = ', '.join([format(i, '.6g') for i in np.diag(self.A)])
            b = ', '.join([format(i, '.6g') for i in self.B])
            return f"{type(self).__name__}.diagonal([{lams}], [{b}])"
        else:
            return f"{type(self).__name__}(A={self.A.tolist()}, B={self.B.tolist()})"


@read_only
class ControllerState:
    """
    Create a ControllerState object that holds the gain, A^t and the
    convolution sum w[t] = sum_{i=1}^{t} A^(t-i) B u[i-1] of the
    estimate-then-control law. The convolution sum may hold one row per
    trial.

    Examples
    --------
    >>> from fadeloop import PlantSpec, ControllerState
    >>> ctrl = ControllerState.initial(PlantSpec.scalar(2.))
    >>> ctrl.gain, ctrl.power_of_A, ctrl.conv_sum, ctrl.t
    (array([-2.]), array([[1.]]), array([0.]), 0)

    """
    __slots__ = ('plant', 'gain', 'power_of_A', 'conv_sum', 't')

    def __init__(self, plant, gain, power_of_A, conv_sum, t):
        gain = np.asarray(gain, dtype=float)
        if gain.shape != (plant.n,):
            raise DimensionError(f'gain must be a vector of length {plant.n}')
        setfrozen(self, 'plant', plant)
        setfrozen(self, 'gain', gain)
        setfrozen(self, 'power_of_A', np.asarray(power_of_A, dtype=float))
        setfrozen(self, 'conv_sum', np.asarray(conv_sum, dtype=float))
        setfrozen(self, 't', int(t))

    @classmethod
    def initial(cls, plant, gain=None, size=None):
        """
        Return the controller state at t = 0 (A^0 = I, w = 0). The gain
        defaults to the deadbeat gain of the plant.

        """
        if gain is None: gain = deadbeat_gain(plant)
        n = plant.n
        conv_sum = np.zeros(n) if size is None else np.zeros((size, n))
        return cls(plant, gain, np.eye(n), conv_sum, 0)

    def __repr__(self):
        return f"<{type(self).__name__}: t={self.t}, gain={np.array2string(self.gain, precision=6)}>"


def controllability_matrix(A, B):
    """
    Return the controllability matrix [B, AB, ..., A^(n-1) B].

    Examples
    --------
    >>> import numpy as np
    >>> controllability_matrix(np.diag([2., 3.]), np.array([1., 1.]))
    array([[1., 2.],
           [1., 3.]])

    """
    columns = [np.asarray(B, dtype=float)]
    for _ in range(columns[0].size - 1): columns.append(A @ columns[-1])
    return np.column_stack(columns)

def deadbeat_gain(plant):
    """
    Return the gain K that places all poles of A + BK at the origin
    (Ackermann's formula), so that (A + BK)^n = 0.

    Raises
    ------
    UncontrollablePair
        If the controllability matrix is singular or ill conditioned.

    Examples
    --------
    >>> from fadeloop import PlantSpec, deadbeat_gain
    >>> deadbeat_gain(PlantSpec.scalar(2.))
    array([-2.])
    >>> deadbeat_gain(PlantSpec.diagonal([2., 3.], [1., 1.]))
    array([ 4., -9.])
    >>> deadbeat_gain(PlantSpec.diagonal([2., 3.], [1., 0.]))
    Traceback (most recent call last):
    UncontrollablePair: uncontrollable pair

    """
    A = plant.A
    n = plant.n
    C = controllability_matrix(A, plant.B)
    if not np.isfinite(C).all() or np.linalg.cond(C) > controllability_condition_limit:
        raise UncontrollablePair()
    last = np.zeros(n)
    last[-1] = 1.
    try:
        row = linalg.solve(C.T, last)
    except linalg.LinAlgError:
        raise UncontrollablePair()
    gain = -row @ np.linalg.matrix_power(A, n)
    return gain + 0.

def _bounded(x, cap):
    return np.isfinite(x) & (np.abs(x) <= cap)

def control_inputs(ctrl, estimates, overflow_cap=None, states=None, errors=None):
    """
    Return the control inputs for a batch of estimates of x0 (one row per
    trial), the advanced controller state, and a mask of the trials whose
    input or convolution sum exceeded the overflow cap.

    If the plant states x[t] and the estimation errors e[t] = xhat[t] - x0
    are given, the input K (A^t xhat[t] + w[t]) is evaluated as
    K (x[t] + A^t e[t]); both are equal since x[t] = A^t x0 + w[t], but the
    latter keeps the relative precision of a vanishing state.

    Raises
    ------
    HorizonOverflow
        If an entry of A^(t+1) exceeds the overflow cap.

    """
    if overflow_cap is None: overflow_cap = settings.overflow_cap
    plant = ctrl.plant
    A = plant.A
    if (states is None) != (errors is None):
        raise ValueError('states and errors must be given together')
    if states is None:
        estimates = np.asarray(estimates, dtype=float)
        u = (estimates @ ctrl.power_of_A.T + ctrl.conv_sum) @ ctrl.gain
    else:
        states = np.asarray(states, dtype=float)
        errors = np.asarray(errors, dtype=float)
        u = (states + errors @ ctrl.power_of_A.T) @ ctrl.gain
    conv_sum = ctrl.conv_sum @ A.T + np.multiply.outer(u, plant.B)
    power_of_A = A @ ctrl.power_of_A
    if not _bounded(power_of_A, overflow_cap).all(): raise HorizonOverflow()
    overflowed = ~(_bounded(u, overflow_cap) & _bounded(conv_sum, overflow_cap).all(axis=-1))
    return u, ControllerState(plant, ctrl.gain, power_of_A, conv_sum, ctrl.t + 1), overflowed

def control_input(ctrl, estimate, overflow_cap=None):
    """
    Return the control input u[t] = K (A^t xhat[t] + w[t]) and the advanced
    controller state (w <- A w + B u, A^t <- A A^t).

    Raises
    ------
    HorizonOverflow
        If any entry of A^(t+1), of w[t+1] or of u[t] exceeds the overflow cap.

    Examples
    --------
    >>> from fadeloop import PlantSpec, ControllerState, control_input
    >>> ctrl = ControllerState.initial(PlantSpec.scalar(2.))
    >>> u, ctrl = control_input(ctrl, [1.5])
    >>> u, ctrl.conv_sum, ctrl.power_of_A
    (-3.0, array([-3.]), array([[2.]]))

    """
    estimate = np.asarray(estimate, dtype=float)
    if estimate.shape != (ctrl.plant.n,):
        raise DimensionError(f'estimate must be a vector of length {ctrl.plant.n}')
    u, ctrl, overflowed = control_inputs(ctrl, estimate, overflow_cap)
    if overflowed: raise HorizonOverflow()
    return float(u), ctrl
