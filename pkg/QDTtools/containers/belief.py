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
from collections import Counter
from itertools import chain
from logging import info
from math import isfinite, sqrt
from numbers import Real
from numpy import array, float64, full, ndarray
from typing import Dict, Hashable, Iterable, Mapping, Sequence, Tuple, Union
from .state import Amplitude, StateVector
from .._functions import check_real, norm_tolerance
from ..exceptions import BadFrequencies, InvalidState, MissingEntry, UnknownSymbol


patterns = ('AA', 'AB', 'BA', 'BB')


class TwoQuestionBeliefState:
    """
    Pure belief state of two-stage experiment:

        |phi> = alpha|AA> + beta|AB> + gamma|BA> + delta|BB>

    Probability of order AB is |beta|^2 and in general is not equal to probability of order BA, |gamma|^2.
    Amplitudes are stored as two-position StateVector with A coded by 0 and B by 1.
    """
    __slots__ = ('__state', '__dict__')

    def __init__(self, alpha: Amplitude, beta: Amplitude, gamma: Amplitude, delta: Amplitude):
        """
        :param alpha: amplitude of AA
        :param beta: amplitude of AB
        :param gamma: amplitude of BA
        :param delta: amplitude of BB
        """
        self.__state = StateVector((alpha, beta, gamma, delta))

    @classmethod
    def from_state(cls, state: StateVector) -> 'TwoQuestionBeliefState':
        if not isinstance(state, StateVector):
            raise TypeError('StateVector expected')
        if state.num_positions != 2:
            raise InvalidState('two positions register required')
        obj = object.__new__(cls)
        obj._TwoQuestionBeliefState__state = state
        return obj

    @classmethod
    def fit(cls, aa: float, ab: float, ba: float, bb: float) -> 'TwoQuestionBeliefState':
        """
        Belief state with real non-negative amplitudes reproducing observed pattern frequencies.

        Phases can't be identified from order frequencies alone, zero phases are used.
        Sum of frequencies within 1e-6 of one is renormalized exactly.
        """
        freqs = []
        for name, f in zip(patterns, (aa, ab, ba, bb)):
            if isinstance(f, bool) or not isinstance(f, Real) or not isfinite(f):
                raise BadFrequencies(f'frequency of {name} should be finite real number')
            if f < 0:
                raise BadFrequencies(f'negative frequency of {name}: {f}')
            freqs.append(float(f))
        total = sum(freqs)
        if abs(total - 1.) > 1e-6:
            raise BadFrequencies(f'frequencies sum to {total}')
        if total != 1.:
            info(f'frequencies sum {total} renormalized')
            freqs = [f / total for f in freqs]
        return cls(*(sqrt(f) for f in freqs))

    def __repr__(self):
        return f'{self.__class__.__name__}({", ".join(f"{complex(x):.6g}" for x in self.amplitudes)})'

    @property
    def state(self) -> StateVector:
        return self.__state

    @property
    def amplitudes(self) -> Tuple[complex, complex, complex, complex]:
        return self.__state.amplitudes

    @property
    def alpha(self) -> complex:
        return self.amplitudes[0]

    @property
    def beta(self) -> complex:
        return self.amplitudes[1]

    @property
    def gamma(self) -> complex:
        return self.amplitudes[2]

    @property
    def delta(self) -> complex:
        return self.amplitudes[3]

    @cached_property
    def probabilities(self) -> Dict[str, float]:
        """
        pattern probabilities {AA, AB, BA, BB}
        """
        return dict(zip(patterns, (float(x) for x in self.__state.probabilities)))

    @property
    def order_probabilities(self) -> Tuple[float, float]:
        """
        (prob(AB), prob(BA)) = (|beta|^2, |gamma|^2). both come from one normalized state, so their sum <= 1.
        """
        p = self.probabilities
        return p['AB'], p['BA']

    @property
    def order_effect_magnitude(self) -> float:
        """
        Signed |beta|^2 - |gamma|^2.
        """
        p = self.probabilities
        return p['AB'] - p['BA']

    @property
    def marginals(self) -> Tuple[float, float]:
        """
        Probabilities of A in the first and in the second letter.
        """
        p = self.probabilities
        return p['AA'] + p['AB'], p['AA'] + p['BA']

    def independence_baseline(self) -> Tuple[float, float]:
        """
        Classical null model with the same marginals: independent A in the first letter and B in the second.
        Returns equal pair for any state.
        """
        p = self.probabilities
        return independent_joint(p['AA'] + p['AB'], p['AB'] + p['BB'])


class ConditionalCognitionTable:
    """
    Cognition C(A|B) of stimulus A preceded by stimulus B.

    Values are supplied by data: no generating formula f(A|B) is assumed, C(A|B) and f(A|B) is the same stored
    number. Order effect of implicit B on explicit A shows as C(A|B) != C(B|A).
    """
    __slots__ = ('__entries',)

    def __init__(self, entries: Mapping[Tuple[Hashable, Hashable], float]):
        """
        :param entries: {(stimulus, preceding stimulus): value in [0, 1]}
        """
        checked = {}
        for key, value in entries.items():
            if not isinstance(key, tuple) or len(key) != 2:
                raise TypeError('keys should be (stimulus, preceding) pairs')
            checked[key] = check_real(value, f'C({key[0]}|{key[1]})', 0., 1.)
        self.__entries = FrozenDict(checked)

    def __getitem__(self, key: Tuple[Hashable, Hashable]) -> float:
        try:
            return self.__entries[key]
        except KeyError:
            raise MissingEntry(f'no value for C({key[0]}|{key[1]})')

    def __contains__(self, key):
        return key in self.__entries

    def __len__(self):
        return len(self.__entries)

    def __iter__(self):
        return iter(self.__entries)

    def asymmetry(self, a: Hashable, b: Hashable) -> float:
        """
        C(a|b) - C(b|a)
        """
        return self[(a, b)] - self[(b, a)]


class BigramModel:
    """
    First order Markov model of symbol sequences.
    Branch probabilities of the transitions tree give classical order asymmetry prob(xy) != prob(yx).
    """
    __slots__ = ('__symbols', '__index', '__initial', '__transitions')

    def __init__(self, symbols: Sequence[Hashable], initial: Union[Mapping[Hashable, float], Sequence[float]],
                 transitions: Union[Mapping[Hashable, Mapping[Hashable, float]], Sequence[Sequence[float]]]):
        """
        :param symbols: alphabet
        :param initial: probabilities of first symbol. mapping or sequence in alphabet order
        :param transitions: P(next|current). nested mapping or row-stochastic matrix in alphabet order
        """
        symbols = tuple(symbols)
        if not symbols:
            raise ValueError('empty alphabet')
        if len(set(symbols)) != len(symbols):
            raise ValueError('alphabet symbols should be unique')
        index = {x: n for n, x in enumerate(symbols)}

        if isinstance(initial, Mapping):
            initial = [initial.get(x, 0.) for x in symbols]
        initial = array(initial, dtype=float64)
        if isinstance(transitions, Mapping):
            transitions = [[transitions.get(x, {}).get(y, 0.) for y in symbols] for x in symbols]
        transitions = array(transitions, dtype=float64)

        if initial.shape != (len(symbols),) or transitions.shape != (len(symbols), len(symbols)):
            raise ValueError('initial and transitions sizes should match alphabet')
        if not (initial >= 0).all() or not (transitions >= 0).all():
            raise BadFrequencies('negative probabilities')
        if abs(initial.sum() - 1.) > norm_tolerance:
            raise BadFrequencies(f'initial probabilities sum to {initial.sum()}')
        sums = transitions.sum(axis=1)
        if (abs(sums - 1.) > norm_tolerance).any():
            raise BadFrequencies(f'transitions rows sum to {sums.tolist()}')

        initial.setflags(write=False)
        transitions.setflags(write=False)
        self.__symbols = symbols
        self.__index = index
        self.__initial = initial
        self.__transitions = transitions

    @classmethod
    def fit(cls, sequences: Iterable[Sequence[Hashable]], symbols: Sequence[Hashable] = None,
            smoothing: float = 0.) -> 'BigramModel':
        """
        Maximum likelihood model of observed sequences.

        :param symbols: alphabet. by default symbols seen in sequences in order of appearance.
        :param smoothing: additive pseudo count. rows without observations are uniform.
        """
        smoothing = check_real(smoothing, 'smoothing', 0.)
        sequences = [tuple(x) for x in sequences if len(x)]
        if symbols is None:
            symbols = tuple(dict.fromkeys(chain.from_iterable(sequences)))
        index = {x: n for n, x in enumerate(symbols)}
        size = len(index)
        if not size:
            raise ValueError('no symbols')

        starts = Counter()
        pairs = Counter()
        for seq in sequences:
            for x in seq:
                if x not in index:
                    raise UnknownSymbol(f'symbol {x!r} not in alphabet')
            starts[index[seq[0]]] += 1
            for x, y in zip(seq, seq[1:]):
                pairs[index[x], index[y]] += 1

        initial = full(size, smoothing)
        for n, c in starts.items():
            initial[n] += c
        transitions = full((size, size), smoothing)
        for (n, m), c in pairs.items():
            transitions[n, m] += c

        total = initial.sum()
        initial = initial / total if total else full(size, 1. / size)
        rows = transitions.sum(axis=1, keepdims=True)
        empty = rows[:, 0] == 0
        transitions[empty] = 1.
        rows[empty] = size
        return cls(symbols, initial, transitions / rows)

    def __repr__(self):
        return f'{self.__class__.__name__}({self.__symbols!r})'

    @property
    def symbols(self) -> Tuple[Hashable, ...]:
        return self.__symbols

    @property
    def initial(self) -> ndarray:
        return self.__initial

    @property
    def transitions(self) -> ndarray:
        return self.__transitions

    def transition(self, current: Hashable, following: Hashable) -> float:
        """
        P(following|current)
        """
        return float(self.__transitions[self.__position(current), self.__position(following)])

    def sequence_probability(self, sequence: Sequence[Hashable]) -> float:
        """
        initial(s0) * P(s1|s0) * ... * P(sn|sn-1)
        """
        if not len(sequence):
            raise ValueError('empty sequence')
        indices = [self.__position(x) for x in sequence]
        p = float(self.__initial[indices[0]])
        for n, m in zip(indices, indices[1:]):
            p *= float(self.__transitions[n, m])
        return p

    def order_asymmetry(self, x: Hashable, y: Hashable) -> float:
        """
        prob(xy) - prob(yx)
        """
        return self.sequence_probability((x, y)) - self.sequence_probability((y, x))

    def __position(self, symbol):
        try:
            return self.__index[symbol]
        except (KeyError, TypeError):
            raise UnknownSymbol(f'symbol {symbol!r} not in alphabet')


def order_probabilities(b: TwoQuestionBeliefState) -> Tuple[float, float]:
    return b.order_probabilities


def order_effect_magnitude(b: TwoQuestionBeliefState) -> float:
    return b.order_effect_magnitude


def fit_belief(aa: float, ab: float, ba: float, bb: float) -> TwoQuestionBeliefState:
    return TwoQuestionBeliefState.fit(aa, ab, ba, bb)


def cognition_asymmetry(table: ConditionalCognitionTable, a: Hashable, b: Hashable) -> float:
    return table.asymmetry(a, b)


def independent_joint(pa: float, pb: float) -> Tuple[float, float]:
    """
    Classical independence: P(AB) = P(A)P(B) = P(BA).
    """
    pa = check_real(pa, 'pA', 0., 1.)
    pb = check_real(pb, 'pB', 0., 1.)
    return pa * pb, pb * pa


def sequence_probability(model: BigramModel, sequence: Sequence[Hashable]) -> float:
    return model.sequence_probability(sequence)


def belief_witness() -> TwoQuestionBeliefState:
    """
    State with order effect 0.1 while the same marginals independence model has none.
    """
    return TwoQuestionBeliefState(sqrt(.5), sqrt(.3), sqrt(.2), 0.)


__all__ = ['TwoQuestionBeliefState', 'ConditionalCognitionTable', 'BigramModel', 'order_probabilities',
           'order_effect_magnitude', 'fit_belief', 'cognition_asymmetry', 'independent_joint',
           'sequence_probability', 'belief_witness']
