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
from numpy import ndarray
from scipy.stats import norm
from typing import NamedTuple, Tuple


def normal_quantile(level: float = .95) -> float:
    """
    Two-sided critical value of standard normal distribution for confidence level.
    """
    return float(norm.ppf(.5 + level / 2.))


def two_proportion_test(p1: float, n1: int, p2: float, n2: int) -> Tuple[float, float]:
    """
    Pooled two-proportion z-test for shift from p1 to p2.

    :return: z-statistic and two-sided p-value. equal proportions with zero pooled variance give (0, 1).
    """
    pooled = (p1 * n1 + p2 * n2) / (n1 + n2)
    se = sqrt(pooled * (1. - pooled) * (1. / n1 + 1. / n2))
    if not se:
        return 0., 1.
    z = (p2 - p1) / se
    return z, float(2. * norm.sf(abs(z)))


class Moments(NamedTuple):
    """
    Mergeable count, mean, sum of squared deviations and extrema of sample.
    """
    n: int
    mean: float
    m2: float
    min: float
    max: float

    @classmethod
    def from_array(cls, values: ndarray) -> 'Moments':
        n = len(values)
        if not n:
            return cls(0, 0., 0., float('inf'), float('-inf'))
        mean = float(values.mean())
        return cls(n, mean, float(((values - mean) ** 2).sum()), float(values.min()), float(values.max()))

    def merge(self, other: 'Moments') -> 'Moments':
        """
        Chan's pairwise update. Merging in fixed order gives bit-identical results.
        """
        if not other.n:
            return self
        if not self.n:
            return other
        n = self.n + other.n
        delta = other.mean - self.mean
        mean = self.mean + delta * other.n / n
        m2 = self.m2 + other.m2 + delta * delta * self.n * other.n / n
        return Moments(n, mean, m2, min(self.min, other.min), max(self.max, other.max))

    @property
    def variance(self) -> float:
        """
        Unbiased sample variance. zero for single observation.
        """
        if self.n < 2:
            return 0.
        return self.m2 / (self.n - 1)


__all__ = ['Moments', 'normal_quantile', 'two_proportion_test']
