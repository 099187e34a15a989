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
from CachedMethods import cached_property
from numpy import arange, array, moveaxis, ndarray, nextafter, searchsorted, sqrt, where
from typing import NamedTuple, Tuple, TYPE_CHECKING
from .._functions import check_real
from ..exceptions import BadPosition, ImpossibleCollapse


if TYPE_CHECKING:
    from QDTtools import StateVector


_last_draw = float(nextafter(1., 0.))


class MeasurementRecord(NamedTuple):
    position: int
    outcome: int
    outcome_probability: float
    post_state: 'StateVector'


class Collapse:
    """
    Projective measurement of single positions in computational basis.

    Outcome 1 is selected iff `draw < P(bit = 1)`. With draw in [0, 1) an outcome of zero probability
    never can be selected: P(1) = 0 gives outcome 0 and P(1) = 1 gives outcome 1 for any draw.
    """
    __slots__ = ()

    def bit_marginal(self: 'StateVector', position: int) -> Tuple[float, float]:
        """
        Probabilities of bit 0 and bit 1 at position.
        """
        self._check_position(position)
        n = self.num_positions
        marginal = moveaxis(self.probabilities.reshape((2,) * n), position, 0).reshape(2, -1).sum(axis=1)
        return float(marginal[0]), float(marginal[1])

    def bit_probability(self: 'StateVector', position: int) -> float:
        """
        Probability to observe 1 at position.
        """
        return self.bit_marginal(position)[1]

    def measure(self: 'StateVector', position: int, draw: float) -> MeasurementRecord:
        """
        Measure one position and collapse the state.

        :param position: register position. 0 is the leftmost label character.
        :param draw: uniform number in [0, 1) from caller's random stream.
        """
        draw = check_real(draw, 'draw', 0., 1., closed_high=False)
        p0, p1 = self.bit_marginal(position)
        if draw < p1:
            return MeasurementRecord(position, 1, p1, self._project(position, 1))
        return MeasurementRecord(position, 0, p0, self._project(position, 0))

    def collapse(self: 'StateVector', draw: float) -> Tuple[str, float]:
        """
        Measure all positions in order with single draw.

        After each step the draw is rescaled into the chosen sub-interval (u / P(1) or (u - P(1)) / P(0)),
        so one uniform number drives the whole register exactly like independent draws would.

        :return: observed label and its probability
        """
        draw = check_real(draw, 'draw', 0., 1., closed_high=False)
        state = self
        label = []
        for position in range(self.num_positions):
            p0, p1 = state.bit_marginal(position)
            record = state.measure(position, draw)
            if record.outcome:
                draw /= p1
            else:
                draw = (draw - p1) / p0
            draw = min(max(draw, 0.), _last_draw)
            label.append(str(record.outcome))
            state = record.post_state
        label = ''.join(label)
        return label, self.basis_probability(label)

    @cached_property
    def outcome_intervals(self: 'StateVector') -> Tuple[Tuple[float, float, str], ...]:
        """
        Partition of [0, 1) into draw intervals mapped by `collapse` to each observable label.
        Ones branches precede zeros branches on every level.
        """
        intervals = []
        stack = [(self, 0, 0., 1., '')]
        while stack:
            state, position, low, high, prefix = stack.pop()
            if position == self.num_positions:
                intervals.append((low, high, prefix))
                continue
            p0, p1 = state.bit_marginal(position)
            split = low + (high - low) * p1
            # stack is LIFO. zeros pushed first
            if p0 > 0.:
                stack.append((state._project(position, 0), position + 1, split, high, prefix + '0'))
            if p1 > 0.:
                stack.append((state._project(position, 1), position + 1, low, split, prefix + '1'))
        intervals[-1] = (intervals[-1][0], 1., intervals[-1][2])
        return tuple(intervals)

    def collapse_many(self: 'StateVector', draws) -> Tuple[Tuple[str, ...], ndarray]:
        """
        Vectorized `collapse` for array of draws.

        :return: observable labels and index of label for each draw
        """
        intervals = self.outcome_intervals
        highs = array([x[1] for x in intervals])
        index = searchsorted(highs, draws, side='right')
        index[index == len(intervals)] = len(intervals) - 1
        return tuple(x[2] for x in intervals), index

    def _project(self: 'StateVector', position: int, outcome: int) -> 'StateVector':
        n = self.num_positions
        vector = self.vector
        bits = (arange(len(vector)) >> (n - 1 - position)) & 1
        projected = where(bits == outcome, vector, 0)
        norm = sqrt((abs(projected) ** 2).sum())
        if not norm:
            raise ImpossibleCollapse(f'outcome {outcome} at position {position} has zero probability')
        return self._from_array(projected / norm)

    def _check_position(self: 'StateVector', position: int):
        if isinstance(position, bool) or not isinstance(position, int):
            raise TypeError('position should be int')
        if not 0 <= position < self.num_positions:
            raise BadPosition(f'position {position} not in register of {self.num_positions}')


__all__ = ['Collapse', 'MeasurementRecord']
