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
from logging import warning
from math import inf, isfinite, sqrt
from numpy import asarray
from typing import NamedTuple, Optional, Sequence
from ..algorithms import Moments, normal_quantile


class SummaryStats(NamedTuple):
    """
    Sample summary with normal approximation confidence interval.
    Interval is approximate for heavy tailed distributions and small samples.
    """
    n: int
    mean: float
    std_error: float
    ci_low: float
    ci_high: float
    min: float
    max: float

    @classmethod
    def from_moments(cls, moments: Moments, level: float = .95) -> 'SummaryStats':
        if moments.n < 1:
            raise ValueError('empty sample')
        se = sqrt(moments.variance / moments.n)
        half = normal_quantile(level) * se
        return cls(moments.n, moments.mean, se, moments.mean - half, moments.mean + half, moments.min, moments.max)

    @classmethod
    def from_values(cls, values: Sequence[float], level: float = .95) -> 'SummaryStats':
        return cls.from_moments(Moments.from_array(asarray(values, dtype=float)), level)

    @property
    def ci(self):
        return self.ci_low, self.ci_high


class Verdict(NamedTuple):
    passed: bool
    z: float
    estimate: float
    analytic: float
    std_error: float


def compare_to_analytic(stats: SummaryStats, analytic: float, sigmas: float = 3.,
                        label: Optional[str] = None) -> Verdict:
    """
    Pass if estimate is within `sigmas` standard errors of analytic value.
    Zero variance sample passes only on exact equality, z is 0 or infinite then.

    :param label: name of check for log message
    """
    if not isfinite(analytic):
        raise ValueError('analytic value should be finite')
    delta = stats.mean - analytic
    if stats.std_error:
        passed = abs(delta) <= sigmas * stats.std_error
        z = delta / stats.std_error
    else:
        passed = delta == 0.
        z = 0. if passed else (inf if delta > 0 else -inf)
    if not passed:
        warning(f'{label or "estimate"} {stats.mean} deviates from analytic {analytic} by z={z}')
    return Verdict(passed, z, stats.mean, analytic, stats.std_error)


__all__ = ['SummaryStats', 'Verdict', 'compare_to_analytic']
