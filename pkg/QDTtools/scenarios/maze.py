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
from math import fsum
from numpy import arange
from typing import NamedTuple, Optional
from .._functions import check_real
from ..algorithms.collapse import _last_draw
from ..containers import MazeSpec, StateVector
from ..exceptions import BadDimension, NoMinority, OutOfRange, ProtocolExhausted


class MazeRun(NamedTuple):
    tries: int
    door: int


def _check_tries(k):
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError('number of tries should be int')
    if k < 1:
        raise OutOfRange(f'number of tries should be positive: {k}')


def maze_classical_pmf(k: int, p: float) -> float:
    """
    Probability to get out exactly on k-th try: (1 - p)^(k - 1) * p.
    """
    _check_tries(k)
    p = check_real(p, 'p', 0., 1., closed_low=False)
    return (1. - p) ** (k - 1) * p


def maze_classical_expected(p: float) -> float:
    """
    Mean of geometric distribution, 1 / p.
    """
    return 1. / check_real(p, 'p', 0., 1., closed_low=False)


def maze_truncated_mass(p: float, limit: int) -> float:
    """
    Probability to get out in at most `limit` tries, summed term by term and capped at 1.
    Misses exactly (1 - p)^limit.
    """
    _check_tries(limit)
    p = check_real(p, 'p', 0., 1., closed_low=False)
    k = arange(limit, dtype=float)
    return min(fsum(((1. - p) ** k * p).tolist()), 1.)


def maze_truncated_expectation(p: float, limit: int) -> float:
    """
    Partial sum of k * P(k) for k up to `limit`.
    """
    _check_tries(limit)
    p = check_real(p, 'p', 0., 1., closed_low=False)
    k = arange(1, limit + 1, dtype=float)
    return float((k * (1. - p) ** (k - 1.) * p).sum())


def maze_state() -> StateVector:
    """
    Door coding state (|001> + |110>) / sqrt(2). Position n is read at door n.
    """
    return StateVector.from_terms({'001': 1., '110': 1.})


def _coding_state(spec: MazeSpec, state: Optional[StateVector]) -> StateVector:
    if not isinstance(spec, MazeSpec):
        raise TypeError('MazeSpec expected')
    if state is None:
        return maze_state()
    if state.num_positions != spec.num_doors:
        raise BadDimension(f'coding state should have {spec.num_doors} positions')
    return state


def maze_quantum_run(spec: MazeSpec, draw: float, state: Optional[StateVector] = None) -> MazeRun:
    """
    Inspect doors in order, reading one position per door, until 1 is observed.

    First reading uses the draw, after each reading the draw is rescaled into the chosen outcome interval.
    For the default state readings after the first one are determined by the collapse.

    :param state: coding state. (|001> + |110>) / sqrt(2) if None
    :return: number of inspections and the door found
    """
    state = _coding_state(spec, state)
    draw = check_real(draw, 'draw', 0., 1., closed_high=False)
    for door in range(spec.num_doors):
        p0, p1 = state.bit_marginal(door)
        record = state.measure(door, draw)
        if record.outcome:
            return MazeRun(door + 1, door)
        draw = min(max((draw - p1) / p0, 0.), _last_draw)
        state = record.post_state
    raise ProtocolExhausted('no door marked by 1')


def maze_minority_protocol(spec: MazeSpec, draw: float, state: Optional[StateVector] = None) -> int:
    """
    Collapse the whole register once and return the door of the bit different from the others.
    Single inspection for any branch.
    """
    state = _coding_state(spec, state)
    label, _ = state.collapse(draw)
    return minority_position(label)


def minority_position(label: str) -> int:
    """
    Position of the unique bit different from all others.
    """
    ones = label.count('1')
    if ones == 1:
        return label.index('1')
    elif ones == len(label) - 1 and len(label) > 2:
        return label.index('0')
    raise NoMinority(f'no unique minority bit in {label}')


def maze_quantum_expected(state: Optional[StateVector] = None) -> float:
    """
    Exact mean number of inspections of `maze_quantum_run` by enumeration of register outcomes.
    """
    if state is None:
        state = maze_state()
    expected = 0.
    for label, p in state.distribution().items():
        if not p:
            continue
        if '1' not in label:
            raise ProtocolExhausted(f'outcome {label} has no door marked by 1')
        expected += p * (label.index('1') + 1)
    return expected


__all__ = ['MazeRun', 'maze_classical_pmf', 'maze_classical_expected', 'maze_truncated_mass',
           'maze_truncated_expectation', 'maze_state', 'maze_quantum_run', 'maze_minority_protocol',
           'minority_position', 'maze_quantum_expected']
