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
from logging import info
from math import cos, pi, sin, sqrt
from numpy import linspace
from typing import Callable, NamedTuple, Optional
from .._functions import check_real
from ..containers import GambleSpec, ReferenceState
from ..exceptions import DegenerateGamble, Unreachable


class DisjunctionData(NamedTuple):
    """
    Share of players accepting the second gamble after known win, known loss and unknown outcome of the first.
    """
    after_win: float
    after_loss: float
    unknown: float

    @property
    def sure_thing_violation(self) -> float:
        """
        How far acceptance with unknown outcome falls below acceptance under both known outcomes.
        Positive value is the disjunction effect.
        """
        return min(self.after_win, self.after_loss) - self.unknown


def reference_utility(reference: ReferenceState, gamble: GambleSpec) -> float:
    """
    Expected utility of reference state: amp_lose^2 * loss + amp_win^2 * win.
    """
    lose, win = reference.probabilities
    return lose * gamble.loss_amount + win * gamble.win_amount


def rotate_reference(reference: ReferenceState, theta: float) -> ReferenceState:
    """
    Turn reference arrow in (lose, win) plane clockwise by theta radians.
    """
    theta = check_real(theta, 'theta')
    c, s = cos(theta), sin(theta)
    lose, win = reference
    return ReferenceState(lose * c + win * s, win * c - lose * s)


def play_unresolved(reference: ReferenceState, theta: float, plays: int = 1) -> ReferenceState:
    """
    Reference after successive plays with unknown outcomes. Each play turns the arrow clockwise by theta.
    """
    if isinstance(plays, bool) or not isinstance(plays, int):
        raise TypeError('plays should be int')
    if plays < 0:
        raise ValueError('plays should be non negative')
    return rotate_reference(reference, check_real(theta, 'theta') * plays)


def reset_reference(gamble: GambleSpec) -> ReferenceState:
    """
    Zero utility reference. Known outcome of the play resets the arrow here.
    """
    spread = gamble.win_amount - gamble.loss_amount
    if not spread:
        raise DegenerateGamble('win and loss amounts are equal')
    return ReferenceState(sqrt(gamble.win_amount / spread), sqrt(-gamble.loss_amount / spread))


def acceptance_probability(reference: ReferenceState) -> float:
    """
    Default acceptance rule: probability to accept the gamble is amp_win^2.
    """
    return reference.amp_win ** 2


def disjunction_reference_data() -> DisjunctionData:
    return DisjunctionData(.69, .59, .36)


def fit_rotation_angle(target_acceptance: float,
                       acceptance_rule: Callable[[ReferenceState], float] = acceptance_probability, *,
                       gamble: Optional[GambleSpec] = None, max_theta: float = pi / 2,
                       tolerance: float = 1e-6, grid: int = 1024) -> float:
    """
    Clockwise angle turning the reset reference to target acceptance after one unresolved play.

    The sweep goes clockwise from zero and the first bracket of the target is refined by bisection.
    Default sweep is a quarter turn. Up to pi is allowed, beyond it the arrow repeats with flipped sign.

    :param acceptance_rule: maps reference to acceptance probability
    :param gamble: gamble defining reset state. default gamble if None
    :param max_theta: sweep limit
    :param tolerance: acceptance accuracy of the result
    :param grid: number of sweep steps for bracketing
    """
    target = check_real(target_acceptance, 'target_acceptance', 0., 1., closed_low=False, closed_high=False)
    max_theta = check_real(max_theta, 'max_theta', 0., pi, closed_low=False)
    if gamble is None:
        gamble = GambleSpec()
    reset = reset_reference(gamble)

    def miss(theta):
        return acceptance_rule(rotate_reference(reset, theta)) - target

    low = 0.
    f_low = miss(low)
    if abs(f_low) <= tolerance:
        return 0.
    for high in linspace(0., max_theta, grid + 1)[1:].tolist():
        f_high = miss(high)
        if abs(f_high) <= tolerance:
            low, f_low = high, f_high
            break
        if (f_low < 0) != (f_high < 0):
            break
        low, f_low = high, f_high
    else:
        raise Unreachable(f'acceptance {target} is not reachable by clockwise turn up to {max_theta}')

    if abs(f_low) > tolerance:
        for _ in range(200):
            middle = (low + high) / 2.
            f_middle = miss(middle)
            if abs(f_middle) <= tolerance / 1e3 or high - low < 1e-15:
                low = middle
                break
            if (f_low < 0) == (f_middle < 0):
                low, f_low = middle, f_middle
            else:
                high = middle
    info(f'acceptance {target} reached by clockwise turn {low}')
    return low


__all__ = ['DisjunctionData', 'reference_utility', 'rotate_reference', 'play_unresolved', 'reset_reference',
           'acceptance_probability', 'disjunction_reference_data', 'fit_rotation_angle']
