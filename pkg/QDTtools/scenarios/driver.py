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
from numpy import arange, argmax
from typing import NamedTuple
from .._functions import check_real, point_tolerance
from ..containers import DriverSpec, StateVector, make_state
from ..exceptions import BadDimension, ImplementationError


grid_step = 1e-4


class DriverOptimum(NamedTuple):
    alpha: float
    payoff: float


def driver_expected_payoff(alpha: float, spec: DriverSpec) -> float:
    """
    Payoff of memoryless strategy exiting with probability alpha at every ramp.
    """
    alpha = check_real(alpha, 'alpha', 0., 1.)
    first, second, cont = spec
    return alpha * first + (1. - alpha) * alpha * second + (1. - alpha) ** 2 * cont


def driver_optimize(spec: DriverSpec) -> DriverOptimum:
    """
    Maximize classical payoff over alpha in [0, 1].

    Closed form of the quadratic is cross-checked by grid sweep with 1e-4 step: no grid point may beat it and
    the best grid point lies within one step of the optimum unless their payoffs tie. Ties go to smaller alpha.
    Tolerance of the check is relative to the largest payoff magnitude.
    """
    first, second, cont = spec
    curvature = cont - second  # payoff = cont + alpha * slope + alpha^2 * curvature
    slope = first + second - 2. * cont
    if curvature < 0.:
        alpha = min(max(-slope / (2. * curvature), 0.), 1.)
        payoff = driver_expected_payoff(alpha, spec)
    else:
        # convex or linear: maximum at an end of interval
        low, high = driver_expected_payoff(0., spec), driver_expected_payoff(1., spec)
        if high > low:
            alpha, payoff = 1., high
        else:
            alpha, payoff = 0., low

    grid = arange(0., 1. + grid_step / 2., grid_step)
    values = grid * first + (1. - grid) * grid * second + (1. - grid) ** 2 * cont
    best = int(argmax(values))  # first maximum
    tolerance = point_tolerance * max(1., abs(first), abs(second), abs(cont))
    if values[best] > payoff + tolerance:
        raise ImplementationError(f'grid point {grid[best]} beats closed form optimum {alpha}')
    if abs(grid[best] - alpha) > grid_step and payoff - values[best] > tolerance:
        raise ImplementationError(f'best grid point {grid[best]} is far from closed form optimum {alpha}')
    return DriverOptimum(alpha, payoff)


def driver_state_payoff(state: StateVector, spec: DriverSpec) -> float:
    """
    Expected payoff of two-position strategy state. Bit 1 means take the exit.
    Position 0 is read at the first ramp and position 1 at the second one.
    """
    if state.num_positions != 2:
        raise BadDimension('driver strategy state should have two positions')
    first, second, cont = spec
    p = state.distribution()
    return (p['10'] + p['11']) * first + p['01'] * second + p['00'] * cont


def product_strategy(alpha: float) -> StateVector:
    """
    Unentangled state exiting with probability alpha at each ramp independently.
    Its payoff equals classical payoff of alpha.
    """
    alpha = check_real(alpha, 'alpha', 0., 1.)
    stay, leave = sqrt(1. - alpha), sqrt(alpha)
    return make_state([stay * stay, stay * leave, leave * stay, leave * leave])


def driver_state() -> StateVector:
    """
    Entangled strategy (|01> + |10>) / sqrt(2).
    """
    return StateVector.from_terms({'01': 1., '10': 1.})


def driver_quantum_payoff(spec: DriverSpec) -> float:
    return driver_state_payoff(driver_state(), spec)


__all__ = ['DriverOptimum', 'driver_expected_payoff', 'driver_optimize', 'driver_state_payoff', 'product_strategy',
           'driver_state', 'driver_quantum_payoff']
