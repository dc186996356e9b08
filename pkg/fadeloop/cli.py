# -*- coding: utf-8 -*-
# fadeloop: Mean square stabilization over power constrained fading channels
# Copyright (C) 2026, fadeloop developers
#
# This module is under the MIT license. See LICENSE.txt for details.
"""
Command line front end of fadeloop. Outputs are data only (JSON and CSV);
every output file is accompanied by the manifest of the run that produced
it. Exit codes: 0 on success, 2 on usage or validation errors, 3 on domain
errors (e.g., an uncontrollable plant).

Examples
--------
>>> from fadeloop.cli import main
>>> main(['capacity', '--dist', 'bernoulli:0.5', '--power', '1', '--noise', '1', '--format', 'csv'])
shannon_bits,msc_bits,msl_bits,contraction
0.25,0.20751875,0.131517203,0.75
0

"""
import sys
import json
import argparse
import numpy as np
import pandas as pd
from math import isfinite, log2
from datetime import datetime, timezone
from ._settings import settings
from ._channel import ChannelParams, FadingDistribution
from ._codec import make_schedule, proportional_shares
from ._control import PlantSpec, deadbeat_gain
from .capacity import (
    capacity_report, mean_square_capacity, schedule_growth_rate,
    critical_erasure_probability, minimum_power,
)
from .simulation import SimConfig, run_estimation, run_closed_loop, sweep_capacity, region_grid
from .exceptions import UncontrollablePair, InfeasibleRegion
from .utils import read_only, setfrozen, roundsigfigs

__all__ = (
    'RunManifest',
    'parse_distribution',
    'parse_epsilon_grid',
    'cmd_capacity',
    'cmd_sweep',
    'cmd_region',
    'cmd_simulate',
    'cmd_threshold',
    'make_parser',
    'main',
)

#: Exit code of usage and validation errors.
USAGE_ERROR = 2

#: Exit code of domain errors.
DOMAIN_ERROR = 3

@read_only
class RunManifest:
    """
    Create a RunManifest object that records how an output was produced.
    Re-running the command with the recorded parameters reproduces the
    output (apart from the timestamp).

    """
    __slots__ = ('command', 'parameters', 'master_seed', 'version', 'timestamp')

    def __init__(self, command, parameters, master_seed=None, timestamp=None):
        from . import __version__
        setfrozen(self, 'command', command)
        setfrozen(self, 'parameters', dict(parameters))
        setfrozen(self, 'master_seed', master_seed)
        setfrozen(self, 'version', __version__)
        setfrozen(self, 'timestamp', timestamp or datetime.now(timezone.utc).isoformat(timespec='seconds'))

    @classmethod
    def from_args(cls, args, names, master_seed=None):
        return cls(args.command_name, {i: getattr(args, i) for i in names}, master_seed)

    def to_dict(self):
        return {'command': self.command,
                'parameters': self.parameters,
                'master_seed': self.master_seed,
                'version': self.version,
                'timestamp': self.timestamp}

    def dump(self, path):
        """Write the manifest as JSON to `path`."""
        with open(path, 'w') as file:
            json.dump(self.to_dict(), file, indent=2)
            file.write('\n')

    def __repr__(self):
        return f"<{type(self).__name__}: {self.command}, version {self.version}>"

# %% Argument types

def _number(text, name):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{name} must be a number, not {text!r}')
    if not isfinite(value): raise argparse.ArgumentTypeError(f'{name} must be finite, not {text!r}')
    return value

def nonnegative_float(text):
    value = _number(text, 'value')
    if value < 0.: raise argparse.ArgumentTypeError(f'value must be nonnegative, not {text!r}')
    return value

def positive_float(text):
    value = _number(text, 'value')
    if value <= 0.: raise argparse.ArgumentTypeError(f'value must be positive, not {text!r}')
    return value

def probability(text):
    value = _number(text, 'probability')
    if not 0. <= value <= 1.: raise argparse.ArgumentTypeError(f'probability must be in [0, 1], not {text!r}')
    return value

def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'value must be an integer, not {text!r}')
    if value < 1: raise argparse.ArgumentTypeError(f'value must be a positive integer, not {text!r}')
    return value

def seed(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'seed must be an integer, not {text!r}')
    if not 0 <= value < 2**64: raise argparse.ArgumentTypeError(f'seed must be a nonnegative 64-bit integer, not {text!r}')
    return value

def _vector(text, name):
    try:
        values = [float(i) for i in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'{name} must be comma separated numbers, not {text!r}')
    if not all([isfinite(i) for i in values]):
        raise argparse.ArgumentTypeError(f'{name} must be finite, not {text!r}')
    return values

def vector(text):
    return _vector(text, 'vector')

def parse_distribution(text):
    """
    Return the FadingDistribution object of a text of the form
    bernoulli:<eps>, point:<g> or atoms:<g:p,...>.

    Examples
    --------
    >>> from fadeloop.cli import parse_distribution
    >>> parse_distribution('atoms:0:0.25,1:0.75')
    FadingDistribution([(0, 0.25), (1, 0.75)])

    """
    kind, _, body = text.partition(':')
    try:
        if kind == 'bernoulli':
            return FadingDistribution.bernoulli(float(body))
        elif kind == 'point':
            return FadingDistribution.point_mass(float(body))
        elif kind == 'atoms':
            atoms = []
            for atom in body.split(','):
                g, p = atom.split(':')
                atoms.append((float(g), float(p)))
            return FadingDistribution(atoms)
    except ValueError as error:
        raise argparse.ArgumentTypeError(f'invalid fading law {text!r}: {error}')
    raise argparse.ArgumentTypeError(
        f'invalid fading law {text!r}; expected bernoulli:<eps>, point:<g> or atoms:<g:p,...>')

def parse_epsilon_grid(text):
    """
    Return the failure probabilities start, start + step, ... up to stop
    (inclusive) of a text of the form start:stop:step.

    Examples
    --------
    >>> from fadeloop.cli import parse_epsilon_grid
    >>> parse_epsilon_grid('0:1:0.5')
    [0.0, 0.5, 1.0]
    >>> parse_epsilon_grid('0.2:0.3:1')
    [0.2]

    """
    try:
        start, stop, step = [float(i) for i in text.split(':')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid grid {text!r}; expected start:stop:step')
    if not (isfinite(start) and isfinite(stop) and isfinite(step)) or step <= 0.:
        raise argparse.ArgumentTypeError(f'invalid grid {text!r}; step must be positive')
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    if count < 1: raise argparse.ArgumentTypeError(f'grid {text!r} is empty')
    grid = [round(start + i * step, 12) for i in range(count)]
    if grid[0] < 0. or grid[-1] > 1.:
        raise argparse.ArgumentTypeError(f'grid {text!r} leaves [0, 1]')
    return grid

def parse_plant(text):
    kind, _, body = text.partition(':')
    if kind not in ('scalar', 'diag'):
        raise argparse.ArgumentTypeError(f'invalid plant {text!r}; expected scalar:<lambda> or diag:<lambda1,lambda2,...>')
    values = _vector(body, 'eigenvalues')
    if kind == 'scalar' and len(values) != 1:
        raise argparse.ArgumentTypeError(f'invalid plant {text!r}; a scalar plant has one eigenvalue')
    return kind, values

def parse_period(text):
    kind, _, body = text.partition(':')
    if kind != 'tau': raise argparse.ArgumentTypeError(f'invalid schedule {text!r}; expected tau:<period>')
    return positive_int(body)

# %% Output

def _dumps(data):
    return json.dumps(roundsigfigs(data, settings.significant_digits), indent=2) + '\n'

def _emit(text, out, manifest):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, 'w', newline='') as file: file.write(text)
        manifest.dump(str(out) + '.manifest.json')

def _csv(frame):
    return frame.to_csv(index=False, float_format=f'%.{settings.significant_digits}g')

def _finite_or_none(value):
    return value if isfinite(value) else None

# %% Commands

def cmd_capacity(args):
    """Emit the capacity report of a channel as JSON or CSV."""
    params = ChannelParams(args.power, args.noise, args.dist)
    report = capacity_report(params)
    manifest = RunManifest.from_args(args, ('dist_text', 'power', 'noise', 'format'))
    if args.format == 'json':
        text = _dumps({**report.to_dict(), 'manifest': manifest.to_dict()})
    else:
        text = _csv(pd.DataFrame([report.to_dict()]))
    _emit(text, args.out, manifest)
    return 0

def cmd_sweep(args):
    """Emit the capacities of Bernoulli fading channels over a grid of failure probabilities as CSV."""
    frame = sweep_capacity(args.eps_grid, args.power, args.noise)
    manifest = RunManifest.from_args(args, ('eps_grid_text', 'power', 'noise'))
    _emit(_csv(frame), args.out, manifest)
    return 0

def cmd_region(args):
    """Emit the labeled stability region of a two-mode plant as CSV."""
    frame = region_grid(args.eps, args.power, args.noise, args.grid_max, args.steps)
    frame['linear_ok'] = frame['linear_ok'].map({True: 'true', False: 'false'})
    manifest = RunManifest.from_args(args, ('eps', 'power', 'noise', 'grid_max', 'steps'))
    _emit(_csv(frame), args.out, manifest)
    return 0

def _simulation_config(args):
    kind, values = args.plant
    channel = ChannelParams(args.power, args.noise, args.dist)
    if kind == 'scalar':
        if args.b is not None and len(args.b) != 1:
            raise ValueError('a scalar plant takes a single input gain')
        plant = PlantSpec.scalar(values[0], 1. if args.b is None else args.b[0])
    else:
        if args.b is not None and len(args.b) != len(values):
            raise ValueError(f'input vector must have {len(values)} entries, not {len(args.b)}')
        plant = PlantSpec.diagonal(values, args.b)
    if plant.n == 1:
        if args.schedule is not None: raise ValueError('scalar plants take no schedule')
        schedule = None
    else:
        period = args.schedule or 10 * plant.n
        schedule = make_schedule(proportional_shares(plant.log_abs_eigs), period)
    return SimConfig(plant, channel, args.prior_var, args.trials, args.horizon,
                     args.seed, schedule)

def cmd_simulate(args):
    """Run a Monte Carlo experiment; emit its verdict as JSON and its trajectories as CSV."""
    config = _simulation_config(args)
    closed_loop = args.mode == 'closed-loop'
    if closed_loop: deadbeat_gain(config.plant)
    with settings.temporary():
        if args.threads is not None: settings.n_threads = args.threads
        stats = run_closed_loop(config) if closed_loop else run_estimation(config)
    manifest = RunManifest.from_args(
        args, ('plant_text', 'b', 'dist_text', 'power', 'noise', 'trials',
               'horizon', 'seed', 'mode', 'schedule', 'prior_var'),
        args.seed)
    summary = stats.summary()
    summary['tail_slope'] = _finite_or_none(summary['tail_slope'])
    schedule = config.codec_schedule
    summary['predicted_growth'] = schedule_growth_rate(
        config.plant.log_abs_eigs, schedule.shares, config.channel
    )
    if args.out is not None:
        _emit(_csv(stats.to_frame()), args.out, manifest)
    sys.stdout.write(_dumps({**summary, 'manifest': manifest.to_dict()}))
    return 0

def cmd_threshold(args):
    """Emit the stabilizability thresholds of a scalar plant as JSON."""
    params = ChannelParams(args.power, args.noise, args.dist)
    L = log2(args.lam)
    c_msc = mean_square_capacity(params)
    data = {'msc_bits': c_msc,
            'max_abs_lambda': 2. ** c_msc,
            'log_abs_lambda': L,
            'minimum_power': minimum_power(L, args.dist, args.noise)}
    gains = set(args.dist.gains[args.dist.probabilities > 0.].tolist())
    if gains <= {0., 1.} and args.power > 0.:
        data['critical_erasure_probability'] = critical_erasure_probability(L, args.power, args.noise)
    manifest = RunManifest.from_args(args, ('lam', 'dist_text', 'power', 'noise'))
    data['manifest'] = manifest.to_dict()
    _emit(_dumps(data), args.out, manifest)
    return 0

# %% Parser

#: Arguments kept as text (for manifests) and parsed after the
#: command line is read.
_text_arguments = {
    'dist': parse_distribution,
    'eps_grid': parse_epsilon_grid,
    'plant': parse_plant,
}

def _spec_argument(parser, flag, **kwargs):
    dest = flag.lstrip('-').replace('-', '_') + '_text'
    parser.add_argument(flag, dest=dest, metavar=flag.lstrip('-').upper(), **kwargs)

def _resolve(args):
    for name, parse in _text_arguments.items():
        text = getattr(args, name + '_text', None)
        if text is not None: setattr(args, name, parse(text))

def _channel_arguments(parser, dist=True):
    if dist: _spec_argument(parser, '--dist', required=True,
                            help='fading law: bernoulli:<eps>, point:<g> or atoms:<g:p,...>')
    parser.add_argument('--power', type=nonnegative_float, required=True, help='transmit power budget P')
    parser.add_argument('--noise', type=nonnegative_float, required=True, help='noise variance')
    parser.add_argument('--out', default=None, help='output file (defaults to stdout)')

def make_parser():
    """Return the argparse parser of the fadeloop command."""
    parser = argparse.ArgumentParser(
        prog='fadeloop',
        description='Mean square stabilization over power constrained fading channels.')
    subparsers = parser.add_subparsers(dest='command_name', required=True)

    capacity = subparsers.add_parser('capacity', help='capacities of a fading channel')
    _channel_arguments(capacity)
    capacity.add_argument('--format', choices=('json', 'csv'), default='json')
    capacity.set_defaults(command=cmd_capacity)

    sweep = subparsers.add_parser('sweep', help='capacities over Bernoulli failure probabilities')
    _spec_argument(sweep, '--eps-grid', required=True, help='start:stop:step')
    _channel_arguments(sweep, dist=False)
    sweep.set_defaults(command=cmd_sweep)

    region = subparsers.add_parser('region', help='stability region of a two-mode plant')
    region.add_argument('--eps', type=probability, required=True, help='Bernoulli failure probability')
    _channel_arguments(region, dist=False)
    region.add_argument('--grid-max', type=positive_float, default=0.3)
    region.add_argument('--steps', type=int, default=200)
    region.set_defaults(command=cmd_region)

    simulate = subparsers.add_parser('simulate', help='Monte Carlo stability experiment')
    _spec_argument(simulate, '--plant', required=True,
                   help='scalar:<lambda> or diag:<lambda1,lambda2,...>')
    simulate.add_argument('--b', type=vector, default=None, help='input vector (defaults to ones)')
    _channel_arguments(simulate)
    simulate.add_argument('--trials', type=positive_int, default=10000)
    simulate.add_argument('--horizon', type=positive_int, default=200)
    simulate.add_argument('--seed', type=seed, default=0)
    simulate.add_argument('--mode', choices=('estimation', 'closed-loop'), default='closed-loop')
    simulate.add_argument('--schedule', type=parse_period, default=None, help='tau:<period>')
    simulate.add_argument('--prior-var', type=positive_float, default=1.)
    simulate.add_argument('--threads', type=positive_int, default=None)
    simulate.set_defaults(command=cmd_simulate)

    threshold = subparsers.add_parser('threshold', help='stabilizability thresholds of a scalar plant')
    threshold.add_argument('--lam', type=positive_float, required=True, help='|lambda| of the plant')
    _channel_arguments(threshold)
    threshold.set_defaults(command=cmd_threshold)
    return parser

def main(argv=None):
    """Run the fadeloop command and return its exit code."""
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit:
        return exit.code
    command = args.command_name
    try:
        _resolve(args)
        if command == 'region' and args.steps < 2:
            raise ValueError(f'steps must be at least 2, not {args.steps}')
        if command == 'threshold' and args.lam < 1.:
            raise ValueError(f'|lambda| must be at least 1, not {args.lam}')
        return args.command(args)
    except (UncontrollablePair, InfeasibleRegion) as error:
        sys.stderr.write(f'fadeloop {command}: error: {error}\n')
        return DOMAIN_ERROR
    except (argparse.ArgumentTypeError, ValueError, OverflowError) as error:
        sys.stderr.write(f'fadeloop {command}: error: {error}\n')
        return USAGE_ERROR
