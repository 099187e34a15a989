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
Decision scenarios with classical and quantum strategies: two-stage gamble, absent-minded driver and
three-door maze.
"""
from .driver import *
from .gamble import *
from .maze import *


__all__ = ['DisjunctionData', 'reference_utility', 'rotate_reference', 'play_unresolved', 'reset_reference',
           'acceptance_probability', 'disjunction_reference_data', 'fit_rotation_angle',
           'DriverOptimum', 'driver_expected_payoff', 'driver_optimize', 'driver_state_payoff', 'product_strategy',
           'driver_state', 'driver_quantum_payoff',
           'MazeRun', 'maze_classical_pmf', 'maze_classical_expected', 'maze_truncated_mass',
           'maze_truncated_expectation', 'maze_state', 'maze_quantum_run', 'maze_minority_protocol',
           'minority_position', 'maze_quantum_expected']
