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
from CachedMethods import cached_property, FrozenDict
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple
from .._functions import check_real
from ..exceptions import InvariantError


positions = ('first', 'second')
value_kinds = ('percent', 'count')
percent_tolerance = .5  # rounding of published percents


class OrderedContingencyTable:
    """
    Answers distribution of one question asked at given position of two questions survey.
    """
    __slots__ = ('__question', '__position', '__categories', '__kind', '__size', '__dict__')

    def __init__(self, question_id: str, position: str, categories: Iterable[Tuple[str, float]],
                 sample_size: int, value_kind: str = 'percent'):
        """
        :param position: first or second
        :param categories: ordered (label, value) pairs
        :param value_kind: percent or count
        """
        if not isinstance(question_id, str) or not question_id:
            raise TypeError('question_id should be non empty string')
        if position not in positions:
            raise ValueError(f'position should be one of {positions}')
        if value_kind not in value_kinds:
            raise ValueError(f'value_kind should be one of {value_kinds}')
        if isinstance(sample_size, bool) or not isinstance(sample_size, int):
            raise TypeError('sample_size should be int')
        if sample_size < 1:
            raise ValueError('sample_size should be positive')

        checked = []
        for label, value in categories:
            if not isinstance(label, str) or not label:
                raise TypeError('category label should be non empty string')
            checked.append((label, check_real(value, f'{question_id}/{label}', 0.)))
        if not checked:
            raise ValueError('no categories')
        if len({x for x, _ in checked}) != len(checked):
            raise ValueError(f'duplicate categories in {question_id}/{position}')

        total = sum(x for _, x in checked)
        if value_kind == 'percent':
            if abs(total - 100.) > percent_tolerance:
                raise InvariantError(f'percents of {question_id}/{position} sum to {total}')
        elif total != sample_size:
            raise InvariantError(f'counts of {question_id}/{position} sum to {total}, sample size {sample_size}')

        self.__question = question_id
        self.__position = position
        self.__categories = tuple(checked)
        self.__kind = value_kind
        self.__size = sample_size

    def __repr__(self):
        return f'{self.__class__.__name__}({self.__question!r}, {self.__position!r}, N={self.__size})'

    def __iter__(self):
        return iter(self.__categories)

    def __len__(self):
        return len(self.__categories)

    def __getitem__(self, label: str) -> float:
        """
        percent of category
        """
        return self.percents[label]

    @property
    def question_id(self) -> str:
        return self.__question

    @property
    def position(self) -> str:
        return self.__position

    @property
    def categories(self) -> Tuple[Tuple[str, float], ...]:
        return self.__categories

    @property
    def value_kind(self) -> str:
        return self.__kind

    @property
    def sample_size(self) -> int:
        return self.__size

    @cached_property
    def labels(self) -> Tuple[str, ...]:
        return tuple(x for x, _ in self.__categories)

    @cached_property
    def percents(self) -> Mapping[str, float]:
        """
        Category percents. Counts are converted with sample size, percents are returned as published.
        """
        if self.__kind == 'percent':
            return FrozenDict(dict(self.__categories))
        return FrozenDict({x: 100. * v / self.__size for x, v in self.__categories})


class OrderEffectReport(NamedTuple):
    """
    Percentage point shifts of categories between two orderings of the same question.
    """
    question_id: str
    positions: Tuple[str, str]
    shifts: Dict[str, float]
    dominant_category: str
    dominant_shift: float
    z: float
    p_value: float

    @property
    def dominant(self) -> Tuple[str, float]:
        return self.dominant_category, self.dominant_shift


__all__ = ['OrderedContingencyTable', 'OrderEffectReport']
