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
from typing import Tuple
from .._functions import check_real, point_tolerance
from ..exceptions import DegenerateGamble, InvalidState, OutOfRange


class GambleSpec:
    """
    Two outcome gamble: win_amount with nominal probability or loss_amount otherwise.
    """
    __slots__ = ('__win', '__loss', '__probability')

    def __init__(self, win_amount: float = 200., loss_amount: float = -100., nominal_win_prob: float = .5):
        win = check_real(win_amount, 'win_amount')
        loss = check_real(loss_amount, 'loss_amount')
        if win == loss:
            raise DegenerateGamble(f'win and loss amounts are equal: {win}')
        if win <= 0:
            raise OutOfRange('win_amount should be positive')
        if loss >= 0:
            raise OutOfRange('loss_amount should be negative')
        self.__win = win
        self.__loss = loss
        self.__probability = check_real(nominal_win_prob, 'nominal_win_prob', 0., 1., closed_low=False,
                                        closed_high=False)

    def __repr__(self):
        return f'{self.__class__.__name__}({self.__win}, {self.__loss}, {self.__probability})'

    def __eq__(self, other):
        return isinstance(other, GambleSpec) and \
            (self.__win, self.__loss, self.__probability) == (other.win_amount, other.loss_amount,
                                                              other.nominal_win_prob)

    def __hash__(self):
        return hash((self.__win, self.__loss, self.__probability))

    @property
    def win_amount(self) -> float:
        return self.__win

    @property
    def loss_amount(self) -> float:
        return self.__loss

    @property
    def nominal_win_prob(self) -> float:
        return self.__probability

    @property
    def expected_value(self) -> float:
        """
        Classical expectation with nominal probability.
        """
        return self.__probability * self.__win + (1. - self.__probability) * self.__loss


class ReferenceState:
    """
    Prospect reference as real superposition amp_lose|1> + amp_win|2> of losing and winning states.
    """
    __slots__ = ('__lose', '__win')

    def __init__(self, amp_lose: float = sqrt(2. / 3.), amp_win: float = sqrt(1. / 3.)):
        lose = check_real(amp_lose, 'amp_lose')
        win = check_real(amp_win, 'amp_win')
        if abs(lose * lose + win * win - 1.) > point_tolerance:
            raise InvalidState(f'squared amplitudes sum to {lose * lose + win * win}')
        self.__lose = lose
        self.__win = win

    def __repr__(self):
        return f'{self.__class__.__name__}({self.__lose!r}, {self.__win!r})'

    def __iter__(self):
        return iter((self.__lose, self.__win))

    def __eq__(self, other):
        return isinstance(other, ReferenceState) and (self.__lose, self.__win) == tuple(other)

    def __hash__(self):
        return hash((self.__lose, self.__win))

    @property
    def amp_lose(self) -> float:
        return self.__lose

    @property
    def amp_win(self) -> float:
        return self.__win

    @property
    def probabilities(self) -> Tuple[float, float]:
        """
        (P(lose), P(win))
        """
        return self.__lose ** 2, self.__win ** 2


class DriverSpec:
    """
    Absent-minded driver payoffs: exit at the first ramp, exit at the second ramp, continue past both.
    """
    __slots__ = ('__first', '__second', '__continue')

    def __init__(self, payoff_exit_first: float = 0., payoff_exit_second: float = 4., payoff_continue: float = 1.):
        self.__first = check_real(payoff_exit_first, 'payoff_exit_first')
        self.__second = check_real(payoff_exit_second, 'payoff_exit_second')
        self.__continue = check_real(payoff_continue, 'payoff_continue')

    def __repr__(self):
        return f'{self.__class__.__name__}({self.__first}, {self.__second}, {self.__continue})'

    def __iter__(self):
        return iter((self.__first, self.__second, self.__continue))

    def __eq__(self, other):
        return isinstance(other, DriverSpec) and tuple(self) == tuple(other)

    def __hash__(self):
        return hash(tuple(self))

    @property
    def payoff_exit_first(self) -> float:
        return self.__first

    @property
    def payoff_exit_second(self) -> float:
        return self.__second

    @property
    def payoff_continue(self) -> float:
        return self.__continue


class MazeSpec:
    """
    Circular room with three doors. One door leads out, two return to the room through the maze.
    """
    __slots__ = ('__doors', '__cap')

    def __init__(self, num_doors: int = 3, exit_prob: float = 1. / 3., max_tries_cap: int = 10 ** 6):
        """
        :param max_tries_cap: truncation of classical runs. run reached cap is reported, not truncated.
        """
        if isinstance(num_doors, bool) or not isinstance(num_doors, int):
            raise TypeError('num_doors should be int')
        if num_doors != 3:
            raise OutOfRange('only three doors maze supported')
        exit_prob = check_real(exit_prob, 'exit_prob')
        if abs(exit_prob - 1. / num_doors) > point_tolerance:
            raise OutOfRange(f'exit_prob should be 1/{num_doors}')
        if isinstance(max_tries_cap, bool) or not isinstance(max_tries_cap, int):
            raise TypeError('max_tries_cap should be int')
        if max_tries_cap < 1:
            raise OutOfRange('max_tries_cap should be positive')
        self.__doors = num_doors
        self.__cap = max_tries_cap

    def __repr__(self):
        return f'{self.__class__.__name__}({self.__doors}, max_tries_cap={self.__cap})'

    def __eq__(self, other):
        return isinstance(other, MazeSpec) and (self.__doors, self.__cap) == (other.num_doors, other.max_tries_cap)

    def __hash__(self):
        return hash((self.__doors, self.__cap))

    @property
    def num_doors(self) -> int:
        return self.__doors

    @property
    def exit_prob(self) -> float:
        return 1. / self.__doors

    @property
    def max_tries_cap(self) -> int:
        return self.__cap


__all__ = ['GambleSpec', 'ReferenceState', 'DriverSpec', 'MazeSpec']
