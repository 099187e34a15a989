# -*- coding: utf-8 -*-
#
#  Copyright 2026 QDTtools developers
#  This file is part of QDTtools.
#
#  QDTtools is free software; you can redistribute it and/or modify
#  it under the terms of the GNU Lesser General Public License as published by
#  the Free Software Foundation; either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  GNU Lesser General Public License for more details.
#
#  You should have received a copy of the GNU Lesser General Public License
#  along with this program; if not, see <https://www.gnu.org/licenses/>.
#
"""
Command line interface `qdt`.

Reports go to standard output as text, csv or json. Diagnostics and errors go to standard error.
Exit status is 0 on success, 1 on invalid input and 2 if `verify all` finds failed checks.
"""
import click
from csv import writer
from functools import wraps
from io import StringIO
from json import dumps
from logging import INFO, WARNING, basicConfig, debug
from math import isfinite
from sys import exit as _exit
from typing import Any, Dict, List, Optional, Sequence
from .containers import DriverSpec, GambleSpec, MazeSpec, fit_belief
from .exceptions import CapExceeded, ImplementationError, ImpossibleCollapse, NoMinority, ProtocolExhausted
from .files import ingest_tables, table1
from .scenarios import driver_optimize, fit_rotation_angle
from .sim import (DriverClassical, DriverQuantum, GamblePlay, MazeClassical, MazeMinority, MazeQuantum, RngStream,
                  compare_to_analytic, run_trials)
from .survey import analyze_tables
from .verification import default_trials as verify_trials, verify_all


default_trials = 10 ** 5
seed_variable = 'QDT_SEED'

# --set keys of scenarios
overrides = {'maze': {'max_tries_cap': int},
             'driver': {'payoff_exit_first': float, 'payoff_exit_second': float, 'payoff_continue': float},
             'gamble': {'win_amount': float, 'loss_amount': float, 'plays': int}}


def _finite(value):
    """
    Non-finite numbers are reported as null.
    """
    if isinstance(value, float):
        return value if isfinite(value) else None
    elif isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    elif isinstance(value, (list, tuple)):
        return [_finite(x) for x in value]
    return value


def _report(command: str, params: Dict[str, Any], analytic=None, estimate=None, stderr_=None, ci=None,
            passed=None, **extra) -> Dict[str, Any]:
    report = {'command': command, 'params': params, 'analytic': analytic, 'estimate': estimate,
              'stderr': stderr_, 'ci': list(ci) if ci is not None else None, 'pass': passed}
    report.update(extra)
    return _finite(report)


def _emit(report: Dict[str, Any], output_format: str, rows: Optional[List[Dict[str, Any]]] = None):
    if output_format == 'json':
        click.echo(dumps(report, indent=2))
    elif output_format == 'csv':
        if rows is None:
            rows = [{k: v for k, v in report.items() if k not in ('params', 'ci')}]
            if report.get('ci') is not None:
                rows[0]['ci_low'], rows[0]['ci_high'] = report['ci']
        buffer = StringIO()
        w = writer(buffer, lineterminator='\n')
        w.writerow(rows[0])
        for row in rows:
            w.writerow('' if row[k] is None else row[k] for k in rows[0])
        click.echo(buffer.getvalue(), nl=False)
    else:
        for key, value in report.items():
            if isinstance(value, dict):
                value = ', '.join(f'{k}={v}' for k, v in value.items())
            elif isinstance(value, list) and value and isinstance(value[0], dict):
                click.echo(f'{key}:')
                for row in value:
                    click.echo('  ' + ', '.join(f'{k}={v}' for k, v in row.items()))
                continue
            click.echo(f'{key}: {value}')


def _parse_overrides(scenario: str, values: Sequence[str]) -> Dict[str, Any]:
    allowed = overrides[scenario]
    parsed = {}
    for item in values:
        key, sep, value = item.partition('=')
        key = key.strip()
        if not sep:
            raise click.BadParameter(f'{item!r} should be key=value', param_hint='--set')
        if key not in allowed:
            raise click.BadParameter(f'unknown key {key!r} for {scenario}. allowed: {", ".join(allowed)}',
                                     param_hint='--set')
        try:
            parsed[key] = allowed[key](value)
        except ValueError:
            raise click.BadParameter(f'invalid value {value!r} of {key}', param_hint='--set')
    return parsed


def common_options(trials=default_trials, stochastic=True):
    """
    Options shared by commands: seed, trials, workers, output format and verbosity.
    """
    def decorator(f):
        @click.option('--verbose', '-v', is_flag=True, help='Log progress to standard error.')
        @click.option('--format', 'output_format', type=click.Choice(['text', 'csv', 'json']), default='text',
                      show_default=True, help='Report format.')
        @wraps(f)
        def wrapper(*args, verbose, **kwargs):
            basicConfig(level=INFO if verbose else WARNING, format='%(levelname)s: %(message)s', force=True)
            return f(*args, **kwargs)

        if stochastic:
            wrapper = click.option('--workers', type=click.IntRange(1), default=1, show_default=True,
                                   help='Monte Carlo worker processes.')(wrapper)
            wrapper = click.option('--trials', type=click.IntRange(1), default=trials, show_default=True,
                                   help='Monte Carlo trials.')(wrapper)
            wrapper = click.option('--seed', type=click.IntRange(0, 2 ** 64 - 1), envvar=seed_variable, default=0,
                                   show_default=True, help=f'Random seed. Default from {seed_variable}.')(wrapper)
        return wrapper
    return decorator


def _simulate(command, protocol, params, seed, trials, workers, output_format, **extra):
    stats = run_trials(protocol, trials, RngStream(seed), workers=workers)
    analytic = protocol.analytic()
    verdict = compare_to_analytic(stats, analytic, label=command)
    report = _report(command, {**params, 'seed': seed, 'trials': trials}, analytic, stats.mean, stats.std_error,
                     stats.ci, verdict.passed, z=verdict.z, **extra)
    _emit(report, output_format)


@click.group()
def cli():
    """
    Quantum and classical models of decisions and question order effects.
    """


@cli.group()
def scenario():
    """
    Decision scenarios: analytic value beside Monte Carlo estimate.
    """


@scenario.command()
@click.option('--mode', type=click.Choice(['classical', 'quantum', 'minority']), default='classical',
              show_default=True)
@click.option('--set', 'settings', multiple=True, metavar='KEY=VALUE', help='Override maze parameter.')
@common_options()
def maze(mode, settings, seed, trials, workers, output_format):
    """
    Three-door maze: random search, sequential reading of coding state or minority bit.
    """
    spec = MazeSpec(**_parse_overrides('maze', settings))
    protocol = {'classical': MazeClassical, 'quantum': MazeQuantum, 'minority': MazeMinority}[mode](spec)
    params = {'mode': mode, 'exit_prob': spec.exit_prob, 'max_tries_cap': spec.max_tries_cap}
    _simulate('scenario maze', protocol, params, seed, trials, workers, output_format,
              value='door' if mode == 'minority' else 'tries')


@scenario.command()
@click.option('--mode', type=click.Choice(['classical', 'quantum']), default='classical', show_default=True)
@click.option('--alpha', type=click.FloatRange(0., 1.), default=None, help='Exit probability. Optimum if omitted.')
@click.option('--set', 'settings', multiple=True, metavar='KEY=VALUE', help='Override payoff.')
@common_options()
def driver(mode, alpha, settings, seed, trials, workers, output_format):
    """
    Absent-minded driver: mixed exit strategy or entangled strategy state.
    """
    spec = DriverSpec(**_parse_overrides('driver', settings))
    params = {'mode': mode, 'payoff_exit_first': spec.payoff_exit_first,
              'payoff_exit_second': spec.payoff_exit_second, 'payoff_continue': spec.payoff_continue}
    extra = {}
    if mode == 'classical':
        if alpha is None:
            optimum = driver_optimize(spec)
            alpha = optimum.alpha
            extra = {'alpha_star': optimum.alpha, 'payoff_star': optimum.payoff}
        params['alpha'] = alpha
        protocol = DriverClassical(alpha, spec)
    else:
        if alpha is not None:
            raise click.BadParameter('alpha is used only in classical mode', param_hint='--alpha')
        protocol = DriverQuantum(spec)
    _simulate('scenario driver', protocol, params, seed, trials, workers, output_format, **extra)


@scenario.command()
@click.option('--theta', type=float, default=None, help='Clockwise turn per unresolved play.')
@click.option('--fit-theta', 'target', type=click.FloatRange(0., 1., min_open=True, max_open=True), default=None,
              help='Calibrate turn to acceptance rate. 0.36 if neither option given.')
@click.option('--set', 'settings', multiple=True, metavar='KEY=VALUE', help='Override gamble parameter.')
@common_options()
def gamble(theta, target, settings, seed, trials, workers, output_format):
    """
    Second gamble accepted after unresolved first play.
    """
    if theta is not None and target is not None:
        raise click.UsageError('--theta and --fit-theta are mutually exclusive')
    values = _parse_overrides('gamble', settings)
    plays = values.pop('plays', 1)
    spec = GambleSpec(**values)
    if theta is None:
        theta = fit_rotation_angle(.36 if target is None else target, gamble=spec)
    protocol = GamblePlay(theta, plays, spec)
    params = {'theta': theta, 'plays': plays, 'win_amount': spec.win_amount, 'loss_amount': spec.loss_amount,
              'expected_value': spec.expected_value}
    if target is not None:
        params['target'] = target
    _simulate('scenario gamble', protocol, params, seed, trials, workers, output_format)


@cli.group()
def survey():
    """
    Question order effects in survey tables.
    """


@survey.command()
@click.option('--input', 'path', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Tables CSV. Bundled Table 1 if omitted.')
@common_options(stochastic=False)
def analyze(path, output_format):
    """
    Category shifts between orderings and fitted belief state of every question.
    """
    tables = table1 if path is None else ingest_tables(path)
    questions = []
    rows = []
    for x in analyze_tables(tables):
        report = x.report
        questions.append({'question_id': x.question_id, 'shifts': dict(report.shifts),
                          'dominant_category': report.dominant_category, 'dominant_shift': report.dominant_shift,
                          'z': report.z, 'p_value': report.p_value,
                          'amplitudes': [a.real for a in x.belief.amplitudes],
                          'yes_shares': list(x.yes_shares),
                          'order_effect_magnitude': x.belief.order_effect_magnitude,
                          'approximation': x.approximation})
        rows.extend({'question_id': x.question_id, 'category': k, 'shift': v,
                     'dominant': k == report.dominant_category} for k, v in report.shifts.items())
    result = _report('survey analyze', {'input': path or 'table1'}, questions=questions)
    _emit(result, output_format, _finite(rows))


@cli.group()
def belief():
    """
    Two-question belief states.
    """


@belief.command()
@click.option('--freqs', required=True, help='Frequencies of AA,AB,BA,BB.')
@common_options(stochastic=False)
def fit(freqs, output_format):
    """
    Belief state reproducing observed order frequencies.
    """
    try:
        values = [float(x) for x in freqs.split(',')]
    except ValueError:
        raise click.BadParameter('four comma separated numbers expected', param_hint='--freqs')
    if len(values) != 4:
        raise click.BadParameter('four comma separated numbers expected', param_hint='--freqs')
    state = fit_belief(*values)
    p_ab, p_ba = state.order_probabilities
    report = _report('belief fit', {'freqs': values}, state.order_effect_magnitude,
                     amplitudes=[a.real for a in state.amplitudes], order_probabilities=[p_ab, p_ba],
                     order_effect_magnitude=state.order_effect_magnitude)
    _emit(report, output_format)


@cli.group()
def verify():
    """
    Acceptance checks.
    """


@verify.command(name='all')
@common_options(trials=verify_trials)
def verify_all_command(seed, trials, workers, output_format):
    """
    Run every acceptance check. Exit status 2 on any failure.
    """
    results = verify_all(seed, trials, workers)
    rows = [{'name': x.name, 'analytic': x.analytic, 'estimate': x.estimate, 'stderr': x.stderr,
             'ci_low': x.ci[0] if x.ci else None, 'ci_high': x.ci[1] if x.ci else None, 'pass': x.passed,
             'detail': x.detail} for x in results]
    passed = all(x.passed for x in results)
    checks = [{'name': x.name, 'analytic': x.analytic, 'estimate': x.estimate, 'stderr': x.stderr,
               'ci': list(x.ci) if x.ci else None, 'pass': x.passed, 'detail': x.detail} for x in results]
    report = _report('verify all', {'seed': seed, 'trials': trials}, passed=passed, checks=checks)
    _emit(report, output_format, _finite(rows))
    return 0 if passed else 2


def main(args: Optional[Sequence[str]] = None) -> int:
    """
    Run command line and return exit status.
    """
    try:
        result = cli.main(args=args, prog_name='qdt', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 1
    except click.Abort:
        click.echo('Aborted!', err=True)
        return 1
    except (ValueError, LookupError, TypeError, ArithmeticError, CapExceeded, ImplementationError, ImpossibleCollapse,
            NoMinority, ProtocolExhausted) as e:
        debug('command failed', exc_info=True)
        click.echo(f'Error: {e}', err=True)
        return 1
    return result if isinstance(result, int) else 0


def run():
    _exit(main())


__all__ = ['cli', 'main', 'run']
