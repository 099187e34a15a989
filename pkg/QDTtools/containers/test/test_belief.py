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
from math import sqrt
from numpy.random import default_rng
from pytest import approx, raises
from QDTtools import (BigramModel, ConditionalCognitionTable, StateVector, TwoQuestionBeliefState, belief_witness,
                      cognition_asymmetry, fit_belief, independent_joint, make_state, order_effect_magnitude,
                      order_probabilities, sequence_probability)
from QDTtools.exceptions import BadFrequencies, InvalidState, MissingEntry, OutOfRange, UnknownSymbol


def test_order_probabilities():
    assert order_probabilities(TwoQuestionBeliefState(0, sqrt(.5), sqrt(.5), 0)) == approx((.5, .5))
    assert order_probabilities(TwoQuestionBeliefState(0, sqrt(.3), sqrt(.7), 0)) == approx((.3, .7), abs=1e-12)
    assert order_probabilities(TwoQuestionBeliefState(.5, .5, .5, .5)) == approx((.25, .25))
    with raises(InvalidState):
        TwoQuestionBeliefState(1, 1, 0, 0)


def test_order_effect_magnitude():
    assert order_effect_magnitude(TwoQuestionBeliefState(.5, .5, .5, .5)) == 0.
    assert order_effect_magnitude(TwoQuestionBeliefState(sqrt(.5), sqrt(.3), sqrt(.2), 0)) == approx(.1, abs=1e-12)
    assert order_effect_magnitude(TwoQuestionBeliefState(0, 1, 0, 0)) == approx(1.)
    assert order_effect_magnitude(TwoQuestionBeliefState(0, 0, 1j, 0)) == approx(-1.)


def test_fit_belief():
    b = fit_belief(.25, .25, .25, .25)
    assert b.amplitudes == approx((.5, .5, .5, .5))

    b = fit_belief(0., .5, .5, 0.)
    assert (b.alpha, b.beta, b.gamma, b.delta) == approx((0, sqrt(.5), sqrt(.5), 0))

    b = fit_belief(.1, .3, .2, .4)
    assert b.amplitudes == approx((sqrt(.1), sqrt(.3), sqrt(.2), sqrt(.4)))
    assert b.order_probabilities == approx((.3, .2), abs=1e-12)

    b = fit_belief(.2500005, .25, .25, .25)
    assert sum(b.probabilities.values()) == approx(1., abs=1e-12)


def test_fit_belief_errors():
    with raises(BadFrequencies):
        fit_belief(-.1, .5, .3, .3)
    with raises(BadFrequencies):
        fit_belief(.5, .5, .5, 0.)
    with raises(BadFrequencies):
        fit_belief(.5, .5, 'x', 0.)


def test_fit_belief_roundtrip():
    freqs = default_rng(1).random((1000, 4))
    freqs /= freqs.sum(axis=1, keepdims=True)
    for aa, ab, ba, bb in freqs.tolist():
        p = fit_belief(aa, ab, ba, bb).probabilities
        assert (p['AA'], p['AB'], p['BA'], p['BB']) == approx((aa, ab, ba, bb), abs=1e-12)


def test_belief_state_views():
    b = fit_belief(.1, .3, .2, .4)
    assert isinstance(b.state, StateVector)
    assert b.state.num_positions == 2
    assert b.state.basis_probability('01') == approx(.3)
    assert b.marginals == approx((.4, .3))
    assert TwoQuestionBeliefState.from_state(b.state).order_effect_magnitude == approx(.1)


def test_witness():
    w = belief_witness()
    assert w.order_effect_magnitude == approx(.1, abs=1e-12)
    x, y = w.independence_baseline()
    assert x == y


def test_cognition_asymmetry():
    assert cognition_asymmetry(ConditionalCognitionTable({('a', 'b'): .4, ('b', 'a'): .4}), 'a', 'b') == 0.

    blindsight = ConditionalCognitionTable({('clear', 'blind'): .9, ('blind', 'clear'): .5})
    assert cognition_asymmetry(blindsight, 'clear', 'blind') == approx(.4)
    assert cognition_asymmetry(blindsight, 'blind', 'clear') == approx(-.4)

    with raises(MissingEntry):
        cognition_asymmetry(ConditionalCognitionTable({('a', 'b'): .4}), 'a', 'b')
    with raises(OutOfRange):
        ConditionalCognitionTable({('a', 'b'): 1.5})


def test_independent_joint():
    assert independent_joint(.5, .5) == (.25, .25)
    assert independent_joint(1., .3) == (.3, .3)
    assert independent_joint(.2, .7) == approx((.14, .14))
    for a, b in default_rng(2).random((1000, 2)).tolist():
        x, y = independent_joint(a, b)
        assert x == y
    with raises(OutOfRange):
        independent_joint(1.2, .3)


def test_bigram():
    m = BigramModel('qu', {'q': .5, 'u': .5}, {'q': {'q': .01, 'u': .99}, 'u': {'q': .05, 'u': .95}})
    assert sequence_probability(m, 'qu') == approx(.495, abs=1e-12)
    assert sequence_probability(m, 'uq') == approx(.025, abs=1e-12)
    assert sequence_probability(m, 'q') == .5
    assert m.order_asymmetry('q', 'u') == approx(.47)

    uniform = BigramModel('qu', (.5, .5), ((.5, .5), (.5, .5)))
    assert sequence_probability(uniform, 'qu') == sequence_probability(uniform, 'uq')

    with raises(UnknownSymbol):
        sequence_probability(m, 'qx')
    with raises(ValueError):
        sequence_probability(m, '')
    with raises(BadFrequencies):
        BigramModel('qu', (.5, .6), ((.5, .5), (.5, .5)))
    with raises(BadFrequencies):
        BigramModel('qu', (.5, .5), ((1.5, -.5), (.5, .5)))


def test_bigram_sequences_sum_to_one():
    rng = default_rng(3)
    for size in (2, 3, 4):
        symbols = 'abcd'[:size]
        initial = rng.random(size)
        transitions = rng.random((size, size))
        m = BigramModel(symbols, initial / initial.sum(), transitions / transitions.sum(axis=1, keepdims=True))
        for k in (1, 2, 3, 4):
            total = sum(m.sequence_probability(x) for x in product(symbols, repeat=k))
            assert total == approx(1., abs=1e-9)


def test_bigram_fit():
    m = BigramModel.fit(['qu', 'qu', 'uq'])
    assert m.symbols == ('q', 'u')
    assert m.initial.tolist() == approx([2 / 3, 1 / 3])
    assert m.transition('q', 'u') == 1.
    assert m.transition('u', 'q') == 1.

    m = BigramModel.fit(['ab'], symbols='abc')
    assert m.transitions[1].tolist() == approx([1 / 3] * 3)
    assert m.transition('a', 'b') == 1.

    m = BigramModel.fit(['ab'], smoothing=1.)
    assert m.transition('a', 'b') == approx(2 / 3)
    with raises(UnknownSymbol):
        BigramModel.fit(['ax'], symbols='ab')


def test_random_order_probabilities():
    rng = default_rng(31)
    for _ in range(500):
        raw = rng.normal(size=4) + 1j * rng.normal(size=4)
        b = TwoQuestionBeliefState.from_state(make_state(raw.tolist()))
        p_ab, p_ba = order_probabilities(b)
        assert 0. <= p_ab and 0. <= p_ba
        assert p_ab + p_ba <= 1. + 1e-12
        assert order_effect_magnitude(b) == approx(p_ab - p_ba, abs=1e-12)
        assert sum(b.probabilities.values()) == approx(1., abs=1e-12)
