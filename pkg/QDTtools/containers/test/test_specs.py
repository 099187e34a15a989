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
from math import sqrt
from pytest import approx, raises
from QDTtools import DriverSpec, GambleSpec, MazeSpec, OrderedContingencyTable, ReferenceState
from QDTtools.exceptions import DegenerateGamble, InvalidState, InvariantError, OutOfRange


def test_defaults():
    g = GambleSpec()
    assert (g.win_amount, g.loss_amount, g.nominal_win_prob) == (200., -100., .5)
    assert g.expected_value == 50.
    r = ReferenceState()
    assert tuple(r) == (sqrt(2 / 3), sqrt(1 / 3))
    assert tuple(DriverSpec()) == (0., 4., 1.)
    m = MazeSpec()
    assert (m.num_doors, m.exit_prob, m.max_tries_cap) == (3, 1 / 3, 10 ** 6)


def test_spec_errors():
    with raises(DegenerateGamble):
        GambleSpec(100., 100.)
    with raises(OutOfRange):
        GambleSpec(-5., -10.)
    with raises(OutOfRange):
        GambleSpec(nominal_win_prob=1.)
    with raises(InvalidState):
        ReferenceState(1., 1.)
    with raises(OutOfRange):
        DriverSpec(float('inf'))
    with raises(OutOfRange):
        MazeSpec(num_doors=4)
    with raises(OutOfRange):
        MazeSpec(exit_prob=.5)
    with raises(TypeError):
        MazeSpec(max_tries_cap=1.5)


def test_spec_equality():
    assert GambleSpec() == GambleSpec(200, -100, .5)
    assert hash(DriverSpec()) == hash(DriverSpec(0, 4, 1))
    assert MazeSpec() != MazeSpec(max_tries_cap=10)


def test_percent_table():
    t = OrderedContingencyTable('q', 'first', [('Yes', 60.), ('No', 39.6)], 500)
    assert t.labels == ('Yes', 'No')
    assert t['Yes'] == 60.
    assert len(t) == 2

    with raises(InvariantError):
        OrderedContingencyTable('q', 'first', [('Yes', 50.), ('No', 40.)], 500)
    with raises(ValueError):
        OrderedContingencyTable('q', 'third', [('Yes', 50.), ('No', 50.)], 500)
    with raises(ValueError):
        OrderedContingencyTable('q', 'first', [('Yes', 50.), ('Yes', 50.)], 500)


def test_count_table():
    t = OrderedContingencyTable('q', 'second', [('Yes', 30), ('No', 70)], 100, 'count')
    assert t.percents == approx({'Yes': 30., 'No': 70.})
    with raises(InvariantError):
        OrderedContingencyTable('q', 'second', [('Yes', 30), ('No', 60)], 100, 'count')
