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
from pytest import approx, raises
from QDTtools import (OrderedContingencyTable, acquiescence_reference_data, analyze_tables, default_mapping,
                      fit_survey_belief, order_shift, table1)
from QDTtools.exceptions import DegenerateAfterExclusion, MappingError, MismatchedTables


def _tables(question):
    tables = {x.position: x for x in table1 if x.question_id == question}
    return tables['first'], tables['second']


def test_satisfaction_shift():
    report = order_shift(*_tables('overall_satisfaction'))
    assert report.positions == ('first', 'second')
    assert report.shifts == {'Satisfied': -8., 'Dissatisfied': 10., "Don't know": -2.}
    assert report.dominant == ('Dissatisfied', 10.)
    assert report.z > 5.
    assert report.p_value < 1e-5


def test_approval_shift():
    report = order_shift(*_tables('bush_approval'))
    assert report.shifts == {'Approve': -1., 'Disapprove': 1., "Don't know": 0.}
    assert report.dominant_category == 'Approve'
    assert abs(report.z) < 1.


def test_shift_antisymmetry():
    first, second = _tables('overall_satisfaction')
    forward, backward = order_shift(first, second), order_shift(second, first)
    assert backward.positions == ('second', 'first')
    assert all(backward.shifts[x] == -y for x, y in forward.shifts.items())
    assert backward.z == approx(-forward.z)
    assert backward.p_value == approx(forward.p_value)


def test_identical_tables():
    categories = (('Yes', 60.), ('No', 40.))
    report = order_shift(OrderedContingencyTable('q', 'first', categories, 100),
                         OrderedContingencyTable('q', 'second', categories, 200))
    assert set(report.shifts.values()) == {0.}
    assert report.z == 0. and report.p_value == 1.


def test_mismatched_tables():
    first, second = _tables('overall_satisfaction')
    other, _ = _tables('bush_approval')
    with raises(MismatchedTables):
        order_shift(first, other)
    with raises(MismatchedTables):
        order_shift(first, first)
    with raises(MismatchedTables):
        fit_survey_belief(second, first)
    with raises(TypeError):
        order_shift(first, {'Yes': 50.})


def test_satisfaction_belief():
    first, second = _tables('overall_satisfaction')
    assert default_mapping(first) == {'Satisfied': 'yes', 'Dissatisfied': 'no', "Don't know": None}
    belief = fit_survey_belief(first, second)
    y1, y2 = belief.marginals
    assert y1 == approx(17 / 95)
    assert y2 == approx(9 / 97)
    assert belief.order_effect_magnitude == approx(y1 - y2)
    assert sum(belief.probabilities.values()) == approx(1.)


def test_synthetic_belief():
    first = OrderedContingencyTable('q', 'first', (('Yes', 60.), ('No', 40.)), 100)
    second = OrderedContingencyTable('q', 'second', (('Yes', 45.), ('No', 55.)), 100)
    assert fit_survey_belief(first, second).order_effect_magnitude == approx(.15)

    symmetric = OrderedContingencyTable('q', 'second', (('Yes', 60.), ('No', 40.)), 100)
    assert fit_survey_belief(first, symmetric).order_effect_magnitude == approx(0., abs=1e-12)

    counts = OrderedContingencyTable('q', 'second', (('Yes', 45), ('No', 55)), 100, 'count')
    assert fit_survey_belief(first, counts).marginals == approx((.6, .45))


def test_mapping_errors():
    single = OrderedContingencyTable('q', 'first', (('Yes', 95.), ("Don't know", 5.)), 100)
    with raises(DegenerateAfterExclusion):
        default_mapping(single)
    many = OrderedContingencyTable('q', 'first', (('Yes', 30.), ('No', 30.), ('Maybe', 40.)), 100)
    with raises(MappingError):
        default_mapping(many)

    first = OrderedContingencyTable('q', 'first', (('Yes', 0.), ('No', 100.)), 100)
    second = OrderedContingencyTable('q', 'second', (('Yes', 50.), ('No', 50.)), 100)
    with raises(DegenerateAfterExclusion):
        fit_survey_belief(first, second)

    first = OrderedContingencyTable('q', 'first', (('Yes', 50.), ('No', 50.)), 100)
    with raises(MappingError):
        fit_survey_belief(first, second, {'Yes': 'yes'})
    with raises(MappingError):
        fit_survey_belief(first, second, {'Yes': 'yes', 'No': 'maybe'})
    belief = fit_survey_belief(first, second, {'Yes': 'no', 'No': 'yes'})
    assert belief.marginals == approx((.5, .5))


def test_analyze_tables():
    analysis = analyze_tables(table1)
    assert [x.question_id for x in analysis] == ['overall_satisfaction', 'bush_approval']
    satisfaction, approval = analysis
    assert satisfaction.report.dominant_category == 'Dissatisfied'
    assert satisfaction.yes_shares == approx((17 / 95, 9 / 97))
    assert approval.yes_shares == approx((25 / 92, 24 / 92))
    assert satisfaction.approximation == 'independence within ordering'

    with raises(MismatchedTables):
        analyze_tables(list(table1)[:3])
    with raises(MismatchedTables):
        analyze_tables([table1[0], table1[0], table1[1]])


def test_acquiescence_data():
    data = acquiescence_reference_data()
    assert (data.agree, data.disagree) == (55., 42.)
    assert (data.forced_assertion, data.forced_alternative) == (33., 55.)
    assert data.agree > data.forced_assertion
