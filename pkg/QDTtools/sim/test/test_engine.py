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
from math import inf
from pickle import dumps, loads
from pytest import approx, raises
from QDTtools import (DriverClassical, GamblePlay, MazeClassical, MazeQuantum, MazeSpec, RngStream, SummaryStats,
                      block_size, compare_to_analytic, get_protocol, run_trials)
from QDTtools.exceptions import CapExceeded, UnknownProtocol


def test_compare_to_analytic():
    verdict = compare_to_analytic(SummaryStats(100, 3.001, .001, 2.999, 3.003, 1., 9.), 3.)
    assert verdict.passed
    assert verdict.z == approx(1.)

    verdict = compare_to_analytic(SummaryStats(100, 3.1, .001, 3.098, 3.102, 1., 9.), 3.)
    assert not verdict.passed
    assert verdict.z == approx(100.)

    verdict = compare_to_analytic(SummaryStats(100, 2., 0., 2., 2., 2., 2.), 2.)
    assert verdict.passed and verdict.z == 0.
    verdict = compare_to_analytic(SummaryStats(100, 2., 0., 2., 2., 2., 2.), 1.)
    assert not verdict.passed and verdict.z == inf


def test_summary_stats():
    stats = SummaryStats.from_values([1., 2., 3., 4.])
    assert stats.n == 4
    assert stats.mean == 2.5
    assert stats.std_error == approx((5 / 3 / 4) ** .5)
    assert stats.ci_low < stats.mean < stats.ci_high
    assert stats.ci_high - stats.mean == approx(1.959964 * stats.std_error)
    assert (stats.min, stats.max) == (1., 4.)

    single = SummaryStats.from_values([7.])
    assert single.std_error == 0. and single.ci == (7., 7.)


def test_reference_values():
    stats = run_trials('maze_classical', 10 ** 6, RngStream(42))
    assert 2.99 <= stats.mean <= 3.01
    assert stats.std_error == approx(.00245, abs=1e-4)

    stats = run_trials('maze_quantum', 10 ** 6, RngStream(42))
    assert 1.99 <= stats.mean <= 2.01
    assert (stats.min, stats.max) == (1., 3.)

    stats = run_trials('driver_quantum', 10 ** 6, RngStream(42))
    assert 1.99 <= stats.mean <= 2.01

    stats = run_trials('maze_minority', 10 ** 5, RngStream(42))
    assert stats.min == stats.max == 2.
    assert compare_to_analytic(stats, 2.).passed


def test_reproducibility():
    n = 2 * block_size + 123
    a = run_trials('maze_classical', n, RngStream(7, 3))
    b = run_trials('maze_classical', n, RngStream(7, 3))
    c = run_trials(MazeClassical(), n, RngStream(7, 3), workers=2)
    assert a == b == c
    assert a.n == n
    assert run_trials('maze_classical', n, RngStream(7, 4)) != a


def test_geometric_smoke():
    analytic = MazeClassical().analytic()
    good = sum(abs(compare_to_analytic(run_trials('maze_classical', 10 ** 6, RngStream(seed)), analytic).z) < 4
               for seed in range(100))
    assert good >= 99


def test_protocols():
    assert MazeClassical().analytic() == 3.
    assert MazeQuantum().analytic() == 2.
    assert get_protocol('maze_minority').analytic() == 2.
    assert DriverClassical(1 / 3).analytic() == approx(4 / 3)
    assert get_protocol('driver_quantum').analytic() == 2.
    assert GamblePlay(0.).analytic() == approx(1 / 3)
    assert GamblePlay().analytic() == approx(.36, abs=1e-6)
    assert loads(dumps(MazeQuantum())).analytic() == 2.
    assert loads(dumps(GamblePlay(.5, 2))) == GamblePlay(.5, 2)

    stats = run_trials('driver_classical', 10 ** 5, RngStream(1), alpha=0.)
    assert stats.mean == 1. and stats.std_error == 0.


def test_errors():
    with raises(UnknownProtocol):
        run_trials('nope', 10)
    with raises(CapExceeded):
        run_trials(MazeClassical(MazeSpec(max_tries_cap=1)), 1000)
    with raises(ValueError):
        run_trials('maze_quantum', 0)
    with raises(TypeError):
        run_trials(MazeQuantum(), 10, alpha=.5)
