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
from CachedMethods import FrozenDict
from logging import info
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple
from .algorithms import two_proportion_test
from .containers import OrderedContingencyTable, OrderEffectReport, TwoQuestionBeliefState, fit_belief
from .exceptions import DegenerateAfterExclusion, MappingError, MismatchedTables


excluded_categories = ("don't know", 'dont know', 'refused', 'no answer')
joint_reconstruction = 'independence within ordering'  # joints are rebuilt from marginals


class AcquiescenceData(NamedTuple):
    """
    Percent answers of the same assertion in agree-disagree and in forced choice format.
    """
    agree: float
    disagree: float
    forced_assertion: float
    forced_alternative: float


class SurveyAnalysis(NamedTuple):
    question_id: str
    report: OrderEffectReport
    belief: TwoQuestionBeliefState
    yes_shares: Tuple[float, float]
    approximation: str = joint_reconstruction


def acquiescence_reference_data() -> AcquiescenceData:
    """
    Peace through military strength: 55/42 in agree-disagree format, 33 against 55 for diplomacy in forced choice.
    Reported only.
    """
    return AcquiescenceData(55., 42., 33., 55.)


def order_shift(first: OrderedContingencyTable, second: OrderedContingencyTable) -> OrderEffectReport:
    """
    Percentage point shifts from `first` table to `second` one over shared categories.
    Significance of the dominant shift is given by pooled two-proportion z-test.
    Swapping arguments negates shifts and z.
    """
    if not isinstance(first, OrderedContingencyTable) or not isinstance(second, OrderedContingencyTable):
        raise TypeError('OrderedContingencyTable expected')
    if first.question_id != second.question_id:
        raise MismatchedTables(f'different questions: {first.question_id} and {second.question_id}')
    if first.position == second.position:
        raise MismatchedTables(f'both tables of {first.question_id} asked {first.position}')

    shared = [x for x in first.labels if x in second.percents]
    if not shared:
        raise MismatchedTables(f'no shared categories in {first.question_id} tables')
    shifts = {x: second[x] - first[x] for x in shared}
    dominant = max(shared, key=lambda x: abs(shifts[x]))  # first of equal
    z, p = two_proportion_test(first[dominant] / 100., first.sample_size,
                               second[dominant] / 100., second.sample_size)
    return OrderEffectReport(first.question_id, (first.position, second.position), FrozenDict(shifts),
                             dominant, shifts[dominant], z, p)


def default_mapping(table: OrderedContingencyTable) -> Dict[str, Optional[str]]:
    """
    Don't know like categories are excluded, first remaining category is yes answer and second is no.
    """
    mapping = {}
    kept = []
    for label in table.labels:
        if label.lower().replace('’', "'") in excluded_categories:
            mapping[label] = None
        else:
            kept.append(label)
    if len(kept) < 2:
        raise DegenerateAfterExclusion(f'{table.question_id}/{table.position} has {len(kept)} answer categories')
    elif len(kept) > 2:
        raise MappingError(f'{table.question_id}/{table.position} has more than two answer categories')
    mapping[kept[0]] = 'yes'
    mapping[kept[1]] = 'no'
    return mapping


def _yes_share(table: OrderedContingencyTable, mapping: Optional[Mapping[str, Optional[str]]]) -> float:
    if mapping is None:
        mapping = default_mapping(table)
    yes = no = 0.
    kinds = set()
    excluded = []
    for label in table.labels:
        try:
            kind = mapping[label]
        except KeyError:
            raise MappingError(f'category {label!r} of {table.question_id} not mapped')
        if kind == 'yes':
            yes += table[label]
        elif kind == 'no':
            no += table[label]
        elif kind is None:
            excluded.append(label)
            continue
        else:
            raise MappingError(f'category {label!r} mapped to {kind!r}. yes, no or None expected')
        if table[label] > 0:
            kinds.add(kind)
    if len(kinds) < 2:
        raise DegenerateAfterExclusion(f'{table.question_id}/{table.position} collapses to single answer')
    if excluded:
        info(f'{table.question_id}/{table.position}: {", ".join(excluded)} excluded, answers renormalized')
    return yes / (yes + no)


def fit_survey_belief(first: OrderedContingencyTable, second: OrderedContingencyTable,
                      mapping: Optional[Mapping[str, Optional[str]]] = None) -> TwoQuestionBeliefState:
    """
    Belief state of one question answered first and answered second. Letter A is yes, letter B is no:
    first letter is the answer when asked first and second letter the answer when asked second.

    Tables give only marginals, joint frequencies are rebuilt assuming independence within ordering.
    Marginals of result reproduce both yes shares and order effect magnitude equals their difference.

    :param mapping: {category: 'yes', 'no' or None for excluded}. `default_mapping` of each table if None
    """
    if first.question_id != second.question_id:
        raise MismatchedTables(f'different questions: {first.question_id} and {second.question_id}')
    if (first.position, second.position) != ('first', 'second'):
        raise MismatchedTables('tables asked first and asked second expected')
    y1 = _yes_share(first, mapping)
    y2 = _yes_share(second, mapping)
    return fit_belief(y1 * y2, y1 * (1. - y2), (1. - y1) * y2, (1. - y1) * (1. - y2))


def analyze_tables(tables: Iterable[OrderedContingencyTable],
                   mapping: Optional[Mapping[str, Optional[str]]] = None) -> List[SurveyAnalysis]:
    """
    Pair tables by question and compute shifts and fitted belief state of every question.
    """
    pairs = {}
    for table in tables:
        pair = pairs.setdefault(table.question_id, {})
        if table.position in pair:
            raise MismatchedTables(f'duplicate {table.position} table of {table.question_id}')
        pair[table.position] = table

    analysis = []
    for question, pair in pairs.items():
        if len(pair) != 2:
            raise MismatchedTables(f'{question} has no pair table')
        first, second = pair['first'], pair['second']
        belief = fit_survey_belief(first, second, mapping)
        analysis.append(SurveyAnalysis(question, order_shift(first, second), belief, belief.marginals))
    return analysis


__all__ = ['AcquiescenceData', 'SurveyAnalysis', 'acquiescence_reference_data', 'order_shift', 'default_mapping',
           'fit_survey_belief', 'analyze_tables', 'joint_reconstruction']
