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
from itertools import product
from math import isfinite
from numbers import Real
from typing import Iterator
from .exceptions import OutOfRange


norm_tolerance = 1e-9  # normalization of amplitudes and distributions
point_tolerance = 1e-12  # pointwise probability identities
max_positions = 4


def labels(positions: int) -> Iterator[str]:
    """
    Basis labels of register in lexicographic order. Leftmost character is position 0.
    """
    for x in product('01', repeat=positions):
        yield ''.join(x)


def positions_count(size: int) -> int:
    """
    Number of two-level systems for vector of given size or -1 if size is not a power of two.
    """
    if size < 2 or size & (size - 1):
        return -1
    return size.bit_length() - 1


def check_real(value, name: str, low: float = float('-inf'), high: float = float('inf'), *,
               closed_low: bool = True, closed_high: bool = True) -> float:
    """
    Validate real number in interval.

    :param closed_low: include low bound
    :param closed_high: include high bound
    """
    if isinstance(value, bool) or not isinstance(value, Real):
        raise TypeError(f'{name} should be real number')
    value = float(value)
    if not isfinite(value):
        raise OutOfRange(f'{name} should be finite')
    if value < low or value > high or not closed_low and value == low or not closed_high and value == high:
        lb = '[' if closed_low else '('
        hb = ']' if closed_high else ')'
        raise OutOfRange(f'{name}={value} not in {lb}{low}, {high}{hb}')
    return value


__all__ = ['labels', 'positions_count', 'check_real', 'norm_tolerance', 'point_tolerance', 'max_positions']
