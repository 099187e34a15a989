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
from numpy import array, complex128, isfinite, ndarray, sqrt
from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union
from .._functions import labels, max_positions, norm_tolerance, positions_count
from ..algorithms.collapse import Collapse
from ..exceptions import BadDimension, BadLabel, InvalidState, ZeroVector


Amplitude = Union[complex, float, int, Tuple[float, float]]


def _as_vector(raw: Sequence[Amplitude]) -> ndarray:
    values = []
    for x in raw:
        if isinstance(x, (tuple, list)):
            if len(x) != 2:
                raise TypeError('amplitude pair should be (re, im)')
            values.append(complex(x[0], x[1]))
        else:
            values.append(complex(x))
    if not values:
        raise BadDimension('empty amplitudes')
    n = positions_count(len(values))
    if n == -1:
        raise BadDimension(f'{len(values)} amplitudes is not a power of two')
    elif n > max_positions:
        raise BadDimension(f'register of {n} positions. up to {max_positions} supported')
    vector = array(values, dtype=complex128)
    if not isfinite(vector).all():
        raise InvalidState('amplitudes should be finite')
    return vector


class StateVector(Collapse):
    """
    Normalized amplitudes over computational basis of 1-4 two-level positions.

    Basis labels are bitstrings in lexicographic order, leftmost character is position 0.
    Objects are immutable: measurement returns new states.
    """
    __slots__ = ('__vector', '__positions', '__dict__')

    def __init__(self, amplitudes: Sequence[Amplitude]):
        """
        :param amplitudes: normalized complex numbers or (re, im) pairs. use `make_state` for raw input.
        """
        vector = _as_vector(amplitudes)
        norm = float((abs(vector) ** 2).sum())
        if abs(norm - 1.) > norm_tolerance:
            raise InvalidState(f'squared amplitudes sum to {norm}')
        vector.setflags(write=False)
        self.__vector = vector
        self.__positions = positions_count(len(vector))

    @classmethod
    def from_terms(cls, terms: Mapping[str, Amplitude]) -> 'StateVector':
        """
        Build normalized state from not normalized {label: amplitude} terms. Absent labels have zero amplitude.
        """
        if not terms:
            raise ZeroVector('no terms')
        size = {len(x) for x in terms}
        if len(size) != 1:
            raise BadLabel('labels of different length')
        size = size.pop()
        raw = [0j] * (2 ** size)
        for label, amplitude in terms.items():
            raw[cls._label_index(label, size)] = amplitude
        return make_state(raw)

    @classmethod
    def _from_array(cls, vector: ndarray) -> 'StateVector':
        obj = object.__new__(cls)
        vector = vector.astype(complex128)
        vector.setflags(write=False)
        obj._StateVector__vector = vector
        obj._StateVector__positions = positions_count(len(vector))
        return obj

    def __getstate__(self):
        return {'vector': self.__vector}

    def __setstate__(self, state):
        vector = state['vector']
        vector.setflags(write=False)
        self.__vector = vector
        self.__positions = positions_count(len(vector))

    def __len__(self):
        return len(self.__vector)

    def __iter__(self) -> Iterator[Tuple[str, complex]]:
        """
        iterate over (label, amplitude) pairs of all basis states
        """
        return zip(self.labels, self.amplitudes)

    def __repr__(self):
        terms = ' + '.join(f'({complex(a):.6g})|{x}>' for x, a in self.terms())
        return f'{self.__class__.__name__}({terms})'

    @property
    def num_positions(self) -> int:
        return self.__positions

    @property
    def vector(self) -> ndarray:
        """
        read-only amplitudes array
        """
        return self.__vector

    @cached_property
    def amplitudes(self) -> Tuple[complex, ...]:
        return tuple(complex(x) for x in self.__vector)

    @cached_property
    def labels(self) -> Tuple[str, ...]:
        return tuple(labels(self.__positions))

    @cached_property
    def probabilities(self) -> ndarray:
        """
        Born rule probabilities in label order. Divided by their sum, so dyadic states stay exact.
        """
        p = abs(self.__vector) ** 2
        p /= p.sum()
        p.setflags(write=False)
        return p

    def terms(self) -> Iterator[Tuple[str, complex]]:
        """
        iterate over basis states with nonzero amplitude
        """
        return ((x, a) for x, a in self if a)

    def amplitude(self, label: str) -> complex:
        return complex(self.__vector[self._label_index(label, self.__positions)])

    def basis_probability(self, label: str) -> float:
        """
        Squared modulus of label amplitude.
        """
        return float(self.probabilities[self._label_index(label, self.__positions)])

    def distribution(self) -> Dict[str, float]:
        return {x: float(p) for x, p in zip(self.labels, self.probabilities)}

    @staticmethod
    def _label_index(label: str, positions: int) -> int:
        if not isinstance(label, str):
            raise BadLabel('label should be string of 0 and 1')
        if len(label) != positions or set(label) - {'0', '1'}:
            raise BadLabel(f'invalid label {label!r} for register of {positions} positions')
        return int(label, 2)


def make_state(raw: Sequence[Amplitude]) -> StateVector:
    """
    Normalizing constructor. Relative phases are preserved.

    :param raw: complex numbers or (re, im) pairs. length should be a power of two up to 16.
    """
    vector = _as_vector(raw)
    norm = sqrt((abs(vector) ** 2).sum())
    if not norm:
        raise ZeroVector('all amplitudes are zero')
    return StateVector._from_array(vector / norm)


def basis_probability(state: StateVector, label: str) -> float:
    return state.basis_probability(label)


def measure_position(state: StateVector, position: int, draw: float):
    """
    Measure position of state with caller supplied uniform draw. See `StateVector.measure`.
    """
    return state.measure(position, draw)


__all__ = ['StateVector', 'make_state', 'basis_probability', 'measure_position']
