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
import io
import json
import pytest
import argparse
import pandas as pd
from math import log2, sqrt
from numpy.testing import assert_allclose
from fadeloop.cli import main, parse_distribution, parse_epsilon_grid, parse_plant, parse_period

def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err

def test_parsers():
    assert parse_distribution('bernoulli:0.25').atoms == [(0., 0.25), (1., 0.75)]
    assert parse_distribution('point:0.5').atoms == [(0.5, 1.)]
    assert parse_distribution('atoms:0:0.25,1:0.75') == parse_distribution('bernoulli:0.25')
    for text in ('bernoulli:1.5', 'bernoulli:x', 'gauss:1', 'atoms:0:0.5,1', 'atoms:1:0.6,0:0.6'):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_distribution(text)
    assert parse_epsilon_grid('0:1:0.25') == [0., 0.25, 0.5, 0.75, 1.]
    assert parse_epsilon_grid('0.1:0.3:0.1') == [0.1, 0.2, 0.3]
    for text in ('0:1', '0:1:0', '0:1.5:0.5', '-0.1:0.5:0.1', '0.5:0.2:0.1'):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_epsilon_grid(text)
    assert parse_plant('scalar:1.1') == ('scalar', [1.1])
    assert parse_plant('diag:1.05,-1.05') == ('diag', [1.05, -1.05])
    with pytest.raises(argparse.ArgumentTypeError):
        parse_plant('scalar:1.1,2')
    with pytest.raises(argparse.ArgumentTypeError):
        parse_plant('jordan:2')
    assert parse_period('tau:20') == 20
    with pytest.raises(argparse.ArgumentTypeError):
        parse_period('tau:0')

def test_capacity(capsys, tmp_path):
    code, out, err = run(capsys, 'capacity', '--dist', 'bernoulli:0.5', '--power', '1', '--noise', '1')
    assert code == 0
    data = json.loads(out)
    assert_allclose([data['shannon_bits'], data['msc_bits'], data['msl_bits'], data['contraction']],
                    [0.25, 0.207518750, 0.131517203, 0.75], rtol=1e-8)
    manifest = data['manifest']
    assert manifest['command'] == 'capacity'
    assert manifest['parameters']['dist_text'] == 'bernoulli:0.5'
    assert manifest['parameters']['power'] == 1.
    code, out, err = run(capsys, 'capacity', '--dist', 'bernoulli:0.8', '--power', '1', '--noise', '1', '--format', 'csv')
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame) == ['shannon_bits', 'msc_bits', 'msl_bits', 'contraction']
    assert_allclose(frame['msc_bits'][0], -0.5 * log2(0.9), rtol=1e-8)
    assert_allclose(frame['msl_bits'][0], 0.024447, atol=1e-6)
    path = tmp_path / 'capacity.json'
    assert main(['capacity', '--dist', 'point:1', '--power', '3', '--noise', '1', '--out', str(path)]) == 0
    assert capsys.readouterr().out == ''
    assert_allclose(json.loads(path.read_text())['msc_bits'], 1.)
    manifest = json.loads((tmp_path / 'capacity.json.manifest.json').read_text())
    assert manifest['command'] == 'capacity'
    assert manifest['master_seed'] is None

def test_usage_errors(capsys):
    code, out, err = run(capsys, 'capacity', '--dist', 'bernoulli:0.5', '--power', '1', '--noise', '0')
    assert code == 2
    assert 'infinite capacity' in err
    code, out, err = run(capsys, 'capacity', '--dist', 'bernoulli:1.5', '--power', '1', '--noise', '1')
    assert code == 2
    assert out == ''
    code, out, err = run(capsys, 'capacity', '--dist', 'bernoulli:0.5', '--power', '-1', '--noise', '1')
    assert code == 2
    code, out, err = run(capsys, 'capacity', '--power', '1', '--noise', '1')
    assert code == 2
    code, out, err = run(capsys, 'transmit')
    assert code == 2

def test_sweep(capsys):
    code, out, err = run(capsys, 'sweep', '--eps-grid', '0:1:0.5', '--power', '1', '--noise', '1')
    assert code == 0
    assert out.splitlines()[0] == 'epsilon,shannon_bits,msc_bits,msl_bits'
    frame = pd.read_csv(io.StringIO(out))
    assert frame['epsilon'].tolist() == [0., 0.5, 1.]
    assert_allclose(frame['shannon_bits'], [0.5, 0.25, 0.])
    assert_allclose(frame['msc_bits'], [0.5, 0.20751875, 0.], rtol=1e-8)
    code, out, err = run(capsys, 'sweep', '--eps-grid', '0:2:0.5', '--power', '1', '--noise', '1')
    assert code == 2

def test_region(capsys):
    code, out, err = run(capsys, 'region', '--eps', '0.8', '--power', '1', '--noise', '1',
                         '--grid-max', '0.1', '--steps', '11')
    assert code == 0
    assert out.splitlines()[0] == 'log_l1,log_l2,label,linear_ok'
    assert len(out.splitlines()) == 122
    assert '0.05,0.05,EXCLUDED,false' in out.splitlines()
    assert '0.07,0.01,GAP,false' in out.splitlines()
    assert '0,0,SUFFICIENT,true' in out.splitlines()
    code, out, err = run(capsys, 'region', '--eps', '0.8', '--power', '1', '--noise', '1', '--steps', '1')
    assert code == 2
    code, out, err = run(capsys, 'region', '--eps', '1.2', '--power', '1', '--noise', '1')
    assert code == 2

def test_simulate(capsys, tmp_path):
    argv = ['simulate', '--plant', 'scalar:1.1', '--dist', 'bernoulli:0.5', '--power', '1',
            '--noise', '1', '--trials', '200', '--horizon', '50', '--seed', '42']
    outputs = []
    for name in ('a.csv', 'b.csv'):
        path = tmp_path / name
        code, out, err = run(capsys, *argv, '--out', str(path))
        assert code == 0
        outputs.append(path.read_text())
        summary = json.loads(out)
    assert outputs[0] == outputs[1]
    assert outputs[0].splitlines()[0] == 't,mean_sq_state,mean_sq_error,mean_tracked_var,mean_power'
    assert len(outputs[0].splitlines()) == 51
    assert summary['verdict'] in ('Stable', 'Unstable', 'Inconclusive')
    assert summary['trials'] == 200 and summary['horizon'] == 50
    assert_allclose(summary['predicted_growth'], 1.21 * 0.75, rtol=1e-8)
    manifest = json.loads((tmp_path / 'a.csv.manifest.json').read_text())
    assert manifest['command'] == 'simulate'
    assert manifest['master_seed'] == 42
    assert manifest['parameters']['plant_text'] == 'scalar:1.1'
    assert manifest['parameters']['mode'] == 'closed-loop'
    code, out, err = run(capsys, *argv, '--threads', '3', '--mode', 'estimation')
    assert code == 0
    assert json.loads(out)['manifest']['parameters']['mode'] == 'estimation'

def test_simulate_vector(capsys):
    lam = 2 ** 0.0704
    code, out, err = run(capsys, 'simulate', '--plant', f'diag:{lam},{-lam}', '--dist', 'bernoulli:0.5',
                         '--power', '1', '--noise', '1', '--trials', '100', '--horizon', '40',
                         '--schedule', 'tau:20')
    assert code == 0
    summary = json.loads(out)
    assert_allclose(summary['predicted_growth'], 2 ** (2 * 0.0704) * sqrt(0.75), rtol=1e-6)
    assert summary['manifest']['parameters']['schedule'] == 20

def test_simulate_single_mode(capsys):
    argv = ['simulate', '--dist', 'bernoulli:0.5', '--power', '1', '--noise', '1',
            '--trials', '50', '--horizon', '30', '--seed', '3']
    code, out, err = run(capsys, *argv, '--plant', 'diag:1.1')
    assert code == 0
    diagonal = json.loads(out)
    assert_allclose(diagonal['predicted_growth'], 1.21 * 0.75, rtol=1e-8)
    code, out, err = run(capsys, *argv, '--plant', 'scalar:1.1')
    assert code == 0
    assert json.loads(out)['tail_slope'] == diagonal['tail_slope']
    for plant in ('scalar:1.1', 'diag:1.1'):
        code, out, err = run(capsys, *argv, '--plant', plant, '--schedule', 'tau:5')
        assert code == 2
        assert 'scalar plants take no schedule' in err
        assert out == ''

def test_simulate_domain_errors(capsys):
    code, out, err = run(capsys, 'simulate', '--plant', 'diag:2,3', '--b', '1,0', '--dist', 'bernoulli:0.5',
                         '--power', '1', '--noise', '1', '--trials', '10', '--horizon', '20')
    assert code == 3
    assert 'uncontrollable pair' in err
    assert out == ''
    code, out, err = run(capsys, 'simulate', '--plant', 'scalar:0.5', '--dist', 'bernoulli:0.5',
                         '--power', '1', '--noise', '1', '--trials', '10', '--horizon', '20')
    assert code == 2
    code, out, err = run(capsys, 'simulate', '--plant', 'scalar:1.1', '--b', '1,1', '--dist', 'bernoulli:0.5',
                         '--power', '1', '--noise', '1', '--trials', '10', '--horizon', '20')
    assert code == 2
    code, out, err = run(capsys, 'simulate', '--plant', 'scalar:1.1', '--dist', 'bernoulli:0.5',
                         '--power', '1', '--noise', '1', '--trials', '10', '--horizon', '1')
    assert code == 2
    code, out, err = run(capsys, 'simulate', '--plant', 'scalar:1.1', '--dist', 'bernoulli:0.5',
                         '--power', '1', '--noise', '1', '--trials', '0')
    assert code == 2

def test_threshold(capsys):
    code, out, err = run(capsys, 'threshold', '--lam', '1.1', '--dist', 'bernoulli:0.5', '--power', '1', '--noise', '1')
    assert code == 0
    data = json.loads(out)
    assert_allclose(data['msc_bits'], 0.20751875, rtol=1e-8)
    assert_allclose(data['max_abs_lambda'], 1. / sqrt(0.75), rtol=1e-8)
    assert_allclose(data['log_abs_lambda'], log2(1.1), rtol=1e-8)
    assert_allclose(data['critical_erasure_probability'], 2. / 1.21 - 1., rtol=1e-8)
    assert data['minimum_power'] < 1.
    code, out, err = run(capsys, 'threshold', '--lam', '1.1', '--dist', 'atoms:0.5:0.5,1:0.5', '--power', '1', '--noise', '1')
    assert code == 0
    assert 'critical_erasure_probability' not in json.loads(out)
    code, out, err = run(capsys, 'threshold', '--lam', '1.5', '--dist', 'bernoulli:0.5', '--power', '1', '--noise', '1')
    assert code == 3
    code, out, err = run(capsys, 'threshold', '--lam', '0.5', '--dist', 'bernoulli:0.5', '--power', '1', '--noise', '1')
    assert code == 2
