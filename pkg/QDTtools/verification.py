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
Acceptance checks of analytic claims and their Monte Carlo estimates.
"""
from logging import info, warning
from math import isclose, sqrt
from typing import Callable, List, NamedTuple, Optional, Tuple
from .containers import (BigramModel, DriverSpec, GambleSpec, MazeSpec, belief_witness, fit_belief,
                         independent_joint)
from .files import table1
from .scenarios import (acceptance_probability, driver_optimize, driver_quantum_payoff, fit_rotation_angle,
                        maze_classical_expected, maze_quantum_expected, reference_utility, reset_reference,
                        rotate_reference)
from .sim import (DriverClassical, DriverQuantum, MazeClassical, MazeMinority, MazeQuantum, RngStream,
                  block_size, compare_to_analytic, run_trials)
from .survey import order_shift


default_trials = 10 ** 6
minority_runs = 10 ** 5


class CheckResult(NamedTuple):
    name: str
    passed: bool
    analytic: Optional[float] = None
    estimate: Optional[float] = None
    stderr: Optional[float] = None
    ci: Optional[Tuple[float, float]] = None
    detail: str = ''


class _Run(NamedTuple):
    seed: int
    trials: int
    workers: int

    def stream(self, stream_id: int) -> RngStream:
        return RngStream(self.seed, stream_id)


def _monte_carlo(name: str, run: _Run, stream_id: int, protocol, analytic: float, exact: bool,
                 detail: str = '') -> CheckResult:
    stats = run_trials(protocol, run.trials, run.stream(stream_id), workers=run.workers)
    verdict = compare_to_analytic(stats, analytic, label=name)
    return CheckResult(name, exact and verdict.passed, analytic, stats.mean, stats.std_error, stats.ci,
                       detail or f'z={verdict.z:.3f}')


def check_maze_classical(run: _Run) -> CheckResult:
    analytic = maze_classical_expected(MazeSpec().exit_prob)
    return _monte_carlo('maze_classical', run, 1, MazeClassical(), analytic, analytic == 3.)


def check_maze_quantum(run: _Run) -> CheckResult:
    analytic = maze_quantum_expected()
    return _monte_carlo('maze_quantum', run, 2, MazeQuantum(), analytic, analytic == 2.)


def check_maze_minority(run: _Run) -> CheckResult:
    n = min(run.trials, minority_runs)
    stats = run_trials(MazeMinority(), n, run.stream(3), workers=run.workers)
    passed = stats.min == stats.max == 2.
    return CheckResult('maze_minority', passed, 2., stats.mean, stats.std_error, stats.ci,
                       f'{n} runs, single inspection, doors {stats.min:g}..{stats.max:g}')


def check_driver_classical(run: _Run) -> CheckResult:
    alpha, payoff = driver_optimize(DriverSpec())
    exact = abs(alpha - 1. / 3.) <= 1e-9 and abs(payoff - 4. / 3.) <= 1e-12
    return _monte_carlo('driver_classical', run, 4, DriverClassical(alpha), payoff, exact,
                        f'alpha*={alpha:.9f} payoff*={payoff:.12f}')


def check_driver_quantum(run: _Run) -> CheckResult:
    analytic = driver_quantum_payoff(DriverSpec())
    _, classical = driver_optimize(DriverSpec())
    return _monte_carlo('driver_quantum', run, 5, DriverQuantum(), analytic, analytic == 2. and analytic > classical,
                        f'quantum {analytic:g} > classical {classical:.6f}')


def check_reference_state(run: _Run) -> CheckResult:
    gamble = GambleSpec()
    reset = reset_reference(gamble)
    utility = reference_utility(reset, gamble)
    passed = abs(reset.amp_lose - sqrt(2. / 3.)) <= 1e-12 and abs(reset.amp_win - sqrt(1. / 3.)) <= 1e-12 and \
        abs(utility) <= 1e-12
    return CheckResult('reference_state', passed, 0., utility, detail=f'reset=({reset.amp_lose:.12f}, '
                                                                          f'{reset.amp_win:.12f})')


def check_theta_fit(run: _Run) -> CheckResult:
    theta = fit_rotation_angle(.36)
    acceptance = acceptance_probability(rotate_reference(reset_reference(GambleSpec()), theta))
    return CheckResult('theta_fit', abs(acceptance - .36) <= 1e-6, .36, acceptance, detail=f'theta={theta:.9f}')


def check_belief_roundtrip(run: _Run) -> CheckResult:
    generator = run.stream(8).generator()
    freqs = generator.random((1000, 4))
    freqs /= freqs.sum(axis=1, keepdims=True)
    worst = 0.
    for row in freqs.tolist():
        p = fit_belief(*row).probabilities
        worst = max(worst, *(abs(p[k] - f) for k, f in zip(('AA', 'AB', 'BA', 'BB'), row)))
    return CheckResult('belief_roundtrip', worst <= 1e-12, detail=f'max deviation {worst:.3g} over 1000 states')


def check_table1(run: _Run) -> CheckResult:
    tables = {(x.question_id, x.position): x for x in table1}
    satisfaction = order_shift(tables['overall_satisfaction', 'first'], tables['overall_satisfaction', 'second'])
    approval = order_shift(tables['bush_approval', 'first'], tables['bush_approval', 'second'])
    found = (satisfaction.shifts['Dissatisfied'], satisfaction.shifts['Satisfied'],
             approval.shifts['Approve'], approval.shifts['Disapprove'])
    passed = all(abs(x - y) <= .5 for x, y in zip(found, (10., -8., -1., 1.)))
    return CheckResult('table1_shifts', passed, detail='Dissatisfied {:+g} Satisfied {:+g} Approve {:+g} '
                                                       'Disapprove {:+g}'.format(*found))


def check_bigram(run: _Run) -> CheckResult:
    model = BigramModel('qu', (.5, .5), ((.01, .99), (.05, .95)))
    uniform = BigramModel('qu', (.5, .5), ((.5, .5), (.5, .5)))
    qu, uq = model.sequence_probability('qu'), model.sequence_probability('uq')
    passed = isclose(qu, .495, abs_tol=1e-12) and isclose(uq, .025, abs_tol=1e-12) and \
        abs(uniform.order_asymmetry('q', 'u')) <= 1e-12
    return CheckResult('bigram_asymmetry', passed, detail=f'prob(qu)={qu:g} prob(uq)={uq:g}')


def check_classical_symmetry(run: _Run) -> CheckResult:
    generator = run.stream(11).generator()
    pairs = generator.random((1000, 2)).tolist()
    symmetric = all(x == y for x, y in (independent_joint(a, b) for a, b in pairs))
    witness = belief_witness()
    null = witness.independence_baseline()
    passed = symmetric and abs(witness.order_effect_magnitude - .1) <= 1e-12 and null[0] == null[1]
    return CheckResult('classical_symmetry', passed, .1, witness.order_effect_magnitude,
                       detail='independent pairs equal, witness order effect 0.1')


def check_reproducibility(run: _Run) -> CheckResult:
    n = min(run.trials, 3 * block_size)
    runs = [run_trials(MazeClassical(), n, run.stream(12), workers=w) for w in (1, 1, run.workers)]
    return CheckResult('reproducibility', all(x == runs[0] for x in runs), detail=f'{len(runs)} identical runs')


checks: Tuple[Tuple[str, Callable[[_Run], CheckResult]], ...] = (
    ('maze_classical', check_maze_classical), ('maze_quantum', check_maze_quantum),
    ('maze_minority', check_maze_minority), ('driver_classical', check_driver_classical),
    ('driver_quantum', check_driver_quantum), ('reference_state', check_reference_state),
    ('theta_fit', check_theta_fit), ('belief_roundtrip', check_belief_roundtrip), ('table1_shifts', check_table1),
    ('bigram_asymmetry', check_bigram), ('classical_symmetry', check_classical_symmetry),
    ('reproducibility', check_reproducibility))


def verify_all(seed: int = 0, trials: int = default_trials, workers: int = 1) -> List[CheckResult]:
    """
    Run all acceptance checks. Monte Carlo checks use own substream of seed each.
    """
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise ValueError('trials should be positive int')
    run = _Run(seed, trials, workers)
    results = []
    for name, check in checks:
        result = check(run)
        if result.passed:
            info(f'{name}: passed')
        else:
            warning(f'{name}: failed. {result.detail}')
        results.append(result)
    return results


__all__ = ['CheckResult', 'checks', 'verify_all', 'default_trials']
