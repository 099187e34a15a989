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
from math import ceil, log
from pytest import approx, raises
from QDTtools import (MazeSpec, StateVector, maze_classical_expected, maze_classical_pmf, maze_minority_protocol,
                      maze_quantum_expected, maze_quantum_run, maze_state, maze_truncated_expectation,
                      maze_truncated_mass)
from QDTtools.exceptions import BadDimension, NoMinority, OutOfRange, ProtocolExhausted


def test_classical_pmf():
    assert maze_classical_pmf(1, 1 / 3) == approx(1 / 3)
    assert maze_classical_pmf(2, 1 / 3) == approx(2 / 9)
    assert maze_classical_pmf(1, 1.) == 1.
    assert maze_classical_pmf(5, 1.) == 0.
    with raises(OutOfRange):
        maze_classical_pmf(0, .5)
    with raises(OutOfRange):
        maze_classical_pmf(1, 0.)


def test_classical_expected():
    assert maze_classical_expected(1 / 3) == 3.
    assert maze_classical_expected(1.) == 1.
    assert maze_classical_expected(.25) == 4.
    with raises(OutOfRange):
        maze_classical_expected(1.5)


def test_truncated_series():
    for p in (.25, 1 / 3, .7):
        limit = ceil(log(1e-12) / log(1. - p)) + 1
        assert maze_truncated_expectation(p, limit) == approx(maze_classical_expected(p), abs=1e-9)
        for k in (1, 5, 20, 100):
            mass = maze_truncated_mass(p, k)
            assert mass <= 1.
            assert 1. - mass == approx((1. - p) ** k, abs=1e-12)
    for k in range(1, 300):
        assert maze_truncated_mass(1 / 3, k) <= 1.
    assert maze_truncated_mass(1 / 3, 100) == approx(1., abs=1e-15)


def test_quantum_run():
    spec = MazeSpec()
    assert maze_quantum_run(spec, .2) == (1, 0)
    assert maze_quantum_run(spec, .7) == (3, 2)
    assert maze_quantum_expected() == 2.

    with raises(ProtocolExhausted):
        maze_quantum_run(spec, .5, StateVector.from_terms({'000': 1}))
    with raises(BadDimension):
        maze_quantum_run(spec, .5, StateVector([1, 0]))


def test_quantum_run_general_state():
    spec = MazeSpec()
    s = StateVector.from_terms({'100': 1, '010': 1, '001': 1, '000': 0})
    assert [maze_quantum_run(spec, x).door for x in (.1, .5, .9)] == [0, 2, 2]
    doors = [maze_quantum_run(spec, x, s).door for x in (.1, .5, .9)]
    assert doors == [0, 1, 2]
    assert maze_quantum_expected(s) == approx(2.)


def test_minority_protocol():
    spec = MazeSpec()
    for draw in (0., .2, .49, .5, .7, .99):
        assert maze_minority_protocol(spec, draw) == 2
    assert maze_state().distribution() == {'000': 0., '001': .5, '010': 0., '011': 0., '100': 0., '101': 0.,
                                           '110': .5, '111': 0.}
    with raises(NoMinority):
        maze_minority_protocol(spec, .3, StateVector.from_terms({'000': 1}))
