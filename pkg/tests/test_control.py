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
from numpy.testing import assert_allclose
from fadeloop.exceptions import UncontrollablePair, HorizonOverflow, DimensionError

def test_plant_spec():
    plant = fl.PlantSpec.diagonal([2., -3.], [1., 0.5])
    assert plant.n == 2
    assert plant.is_diagonal
    assert_allclose(plant.eigenvalues, [2., -3.])
    assert_allclose(plant.log_abs_eigs, [1., np.log2(3.)])
    assert repr(plant) == 'PlantSpec.diagonal([2, -3], [1, 0.5])'
    assert repr(fl.PlantSpec.scalar(1.1)) == 'PlantSpec.scalar(1.1, b=1)'
    assert fl.PlantSpec.diagonal([2., 3.]).B.tolist() == [1., 1.]
    rotation = fl.PlantSpec([[0., -2.], [2., 0.]], [0., 1.])
    assert not rotation.is_diagonal
    spectrum = rotation.spectrum()
    assert_allclose(spectrum.mu, [2])
    assert_allclose(spectrum.log_abs_eigs, [1.])
    with pytest.raises(ValueError):
        rotation.log_abs_eigs
    # Marginally stable eigenvalues are allowed
    fl.PlantSpec.scalar(-1.)
    with pytest.raises(ValueError):
        fl.PlantSpec.scalar(0.5)
    with pytest.raises(ValueError):
        fl.PlantSpec.scalar(np.inf)
    with pytest.raises(DimensionError):
        fl.PlantSpec(np.eye(2) * 2., [1.])
    with pytest.raises(TypeError):
        plant.A = np.eye(2)

def test_controllability_matrix():
    A = np.array([[1.5, 1., 0.], [0., 1.2, 1.], [0., 0., -1.1]])
    B = np.array([0., 0., 1.])
    C = fl.controllability_matrix(A, B)
    assert_allclose(C[:, 0], B)
    assert_allclose(C[:, 1], A @ B)
    assert_allclose(C[:, 2], A @ A @ B)

def test_deadbeat_gain():
    plant = fl.PlantSpec.diagonal([2., 3.], [1., 1.])
    K = fl.deadbeat_gain(plant)
    assert_allclose(K, [4., -9.], rtol=1e-12)
    closed = plant.A + np.outer(plant.B, K)
    assert np.linalg.norm(closed @ closed) < 1e-8
    assert_allclose(fl.deadbeat_gain(fl.PlantSpec.scalar(1.3)), [-1.3])
    assert_allclose(fl.deadbeat_gain(fl.PlantSpec.scalar(2., b=4.)), [-0.5])
    A = np.array([[1.5, 1., 0.], [0., 1.2, 1.], [0., 0., -1.1]])
    plant = fl.PlantSpec(A, [0., 0., 1.])
    K = fl.deadbeat_gain(plant)
    closed = A + np.outer(plant.B, K)
    assert np.linalg.norm(np.linalg.matrix_power(closed, 3)) < 1e-8

def test_uncontrollable_pairs():
    with pytest.raises(UncontrollablePair, match='uncontrollable pair'):
        fl.deadbeat_gain(fl.PlantSpec.diagonal([2., 3.], [1., 0.]))
    # Repeated eigenvalues cannot be steered by a single input
    with pytest.raises(UncontrollablePair):
        fl.deadbeat_gain(fl.PlantSpec.diagonal([1.05, 1.05], [1., 1.]))
    fl.deadbeat_gain(fl.PlantSpec.diagonal([1.05, -1.05], [1., 1.]))
    with pytest.raises(UncontrollablePair):
        fl.ControllerState.initial(fl.PlantSpec.scalar(2., b=0.))

def test_controller_state():
    plant = fl.PlantSpec.diagonal([2., 3.], [1., 1.])
    ctrl = fl.ControllerState.initial(plant, size=5)
    assert ctrl.conv_sum.shape == (5, 2)
    assert_allclose(ctrl.power_of_A, np.eye(2))
    assert ctrl.t == 0
    with pytest.raises(DimensionError):
        fl.ControllerState.initial(plant, gain=[1.])

def test_control_input():
    ctrl = fl.ControllerState.initial(fl.PlantSpec.scalar(2.))
    u, ctrl = fl.control_input(ctrl, [1.5])
    assert u == -3.
    assert_allclose(ctrl.conv_sum, [-3.])
    assert_allclose(ctrl.power_of_A, [[2.]])
    assert ctrl.t == 1
    # An unchanged estimate is fully cancelled after the first input
    u, ctrl = fl.control_input(ctrl, [1.5])
    assert u == 0.
    with pytest.raises(DimensionError):
        fl.control_input(ctrl, [1., 2.])

def test_perfect_estimate_reaches_origin():
    plant = fl.PlantSpec.diagonal([2., 3.], [1., 1.])
    ctrl = fl.ControllerState.initial(plant)
    x0 = np.array([1., -1.])
    x = x0.copy()
    for t in range(4):
        u, ctrl = fl.control_input(ctrl, x0)
        x = plant.A @ x + plant.B * u
        if t >= 1: assert np.abs(x).max() < 1e-9
    plant = fl.PlantSpec.scalar(1.5)
    ctrl = fl.ControllerState.initial(plant)
    u, ctrl = fl.control_input(ctrl, [2.])
    assert 1.5 * 2. + u == 0.

def test_control_inputs_batch():
    plant = fl.PlantSpec.diagonal([2., 3.], [1., 1.])
    estimates = np.array([[1., -1.], [0.5, 2.], [0., 0.]])
    ctrl = fl.ControllerState.initial(plant, size=3)
    singles = [fl.ControllerState.initial(plant) for _ in range(3)]
    for _ in range(3):
        u, ctrl, overflowed = fl.control_inputs(ctrl, estimates)
        assert not overflowed.any()
        for i in range(3):
            u_single, singles[i] = fl.control_input(singles[i], estimates[i])
            assert_allclose(u[i], u_single, rtol=1e-14, atol=1e-9)
            assert_allclose(ctrl.conv_sum[i], singles[i].conv_sum, rtol=1e-14, atol=1e-9)

def test_error_form_of_control_law():
    plant = fl.PlantSpec.scalar(1.1)
    channel = fl.ChannelParams(1., 1., fl.FadingDistribution.bernoulli(0.5))
    rng = fl.RngStream(5)
    x0 = 0.8
    codec = fl.ScalarCodecState.initial(1., x0=x0)
    ctrl = fl.ControllerState.initial(plant)
    K = ctrl.gain[0]
    x = np.array([x0])
    for t in range(40):
        r, g = fl.transmit(channel, fl.encode(codec, x0, channel.power), rng)
        codec = fl.decode_update(codec, r, g, channel.power, channel.noise_var)
        w = ctrl.conv_sum[0]
        power_of_A = ctrl.power_of_A[0, 0]
        u, ctrl, overflowed = fl.control_inputs(ctrl, [codec.estimate], states=x, errors=[codec.error])
        assert not overflowed
        # The estimate is recovered from the applied input
        assert_allclose((u / K - w) / power_of_A, codec.estimate, atol=1e-9)
        x = plant.A @ x + plant.B * u
        assert_allclose(x, -plant.A[0, 0] ** (t + 1) * codec.error, rtol=1e-9, atol=1e-300)
    with pytest.raises(ValueError):
        fl.control_inputs(ctrl, [codec.estimate], states=x)

def test_overflow():
    ctrl = fl.ControllerState.initial(fl.PlantSpec.scalar(2.), size=2)
    u, ctrl, overflowed = fl.control_inputs(ctrl, np.array([[1.], [100.]]), overflow_cap=10.)
    assert overflowed.tolist() == [False, True]
    with pytest.raises(HorizonOverflow, match='horizon overflow'):
        fl.control_inputs(fl.ControllerState.initial(fl.PlantSpec.scalar(2.)), [1.], overflow_cap=1.5)
    with pytest.raises(HorizonOverflow):
        fl.control_input(fl.ControllerState.initial(fl.PlantSpec.scalar(2.)), [100.], overflow_cap=10.)
    ctrl = fl.ControllerState.initial(fl.PlantSpec.scalar(2.))
    with pytest.raises(HorizonOverflow):
        for _ in range(2000): u, ctrl = fl.control_input(ctrl, [1.])

if __name__ == '__main__':
    test_plant_spec()
    test_controllability_matrix()
    test_deadbeat_gain()
    test_uncontrollable_pairs()
    test_controller_state()
    test_control_input()
    test_perfect_estimate_reaches_origin()
    test_control_inputs_batch()
    test_error_form_of_control_law()
    test_overflow()
