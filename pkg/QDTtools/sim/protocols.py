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
from math import nan
from numpy import array, float64, isnan, ndarray, where
from numpy.random import Generator
from typing import Dict, Optional, Type
from ..containers import DriverSpec, GambleSpec, MazeSpec, StateVector
from ..exceptions import CapExceeded, ProtocolExhausted, UnknownProtocol
from ..scenarios import (acceptance_probability, disjunction_reference_data, driver_expected_payoff, driver_state,
                         driver_state_payoff, fit_rotation_angle, maze_classical_expected, maze_quantum_expected,
                         maze_state, minority_position, play_unresolved, reset_reference)
from .._functions import check_real


class Protocol:
    """
    Stochastic protocol of scenario. Subclasses draw a batch of independent trial values from generator
    and know the analytic mean of a trial.
    """
    __slots__ = ()
    name: str

    def __reduce__(self):
        return self.__class__, self._args()

    def __repr__(self):
        return f'{self.__class__.__name__}{self._args()!r}'

    def __eq__(self, other):
        return type(self) is type(other) and self._args() == other._args()

    def __hash__(self):
        return hash((type(self), self._args()))

    def _args(self) -> tuple:
        raise NotImplementedError

    @property
    def params(self) -> Dict[str, float]:
        """
        Numeric parameters for reports.
        """
        return {}

    def analytic(self) -> float:
        raise NotImplementedError

    def sample(self, generator: Generator, size: int) -> ndarray:
        raise NotImplementedError


class _StateProtocol(Protocol):
    """
    Protocols collapsing full register once per trial.
    Each observable label is mapped to trial value, then draws are routed through collapse intervals.
    """
    __slots__ = ()

    def _values(self) -> ndarray:
        return array([self._value(x) for _, _, x in self.state.outcome_intervals], dtype=float64)

    def _value(self, label: str) -> float:
        raise NotImplementedError

    def sample(self, generator: Generator, size: int) -> ndarray:
        _, index = self.state.collapse_many(generator.random(size))
        values = self._values()[index]
        if isnan(values).any():
            raise ProtocolExhausted(f'{self.name} observed outcome without result')
        return values


class MazeClassical(Protocol):
    """
    Random door choice until exit. Trial value is number of tries.
    """
    __slots__ = ('__spec',)
    name = 'maze_classical'

    def __init__(self, spec: Optional[MazeSpec] = None):
        self.__spec = spec or MazeSpec()

    def _args(self):
        return self.__spec,

    @property
    def params(self):
        return {'exit_prob': self.__spec.exit_prob, 'max_tries_cap': self.__spec.max_tries_cap}

    def analytic(self):
        return maze_classical_expected(self.__spec.exit_prob)

    def sample(self, generator, size):
        tries = generator.geometric(self.__spec.exit_prob, size)
        if size and tries.max() > self.__spec.max_tries_cap:
            raise CapExceeded(f'run of {int(tries.max())} tries exceeds cap {self.__spec.max_tries_cap}')
        return tries.astype(float64)


class MazeQuantum(_StateProtocol):
    """
    Doors inspected in order until coding state shows 1. Trial value is number of inspections.
    """
    __slots__ = ('__spec', '__state')
    name = 'maze_quantum'

    def __init__(self, spec: Optional[MazeSpec] = None, state: Optional[StateVector] = None):
        self.__spec = spec or MazeSpec()
        self.__state = maze_state() if state is None else state

    def _args(self):
        return self.__spec, self.__state

    @property
    def state(self):
        return self.__state

    def analytic(self):
        return maze_quantum_expected(self.__state)

    def _value(self, label):
        return label.index('1') + 1. if '1' in label else nan


class MazeMinority(_StateProtocol):
    """
    Single collapse of coding state. Trial value is door index of minority bit.
    """
    __slots__ = ('__spec', '__state')
    name = 'maze_minority'

    def __init__(self, spec: Optional[MazeSpec] = None, state: Optional[StateVector] = None):
        self.__spec = spec or MazeSpec()
        self.__state = maze_state() if state is None else state

    def _args(self):
        return self.__spec, self.__state

    @property
    def state(self):
        return self.__state

    def analytic(self):
        return sum(p * minority_position(x) for x, p in self.__state.distribution().items() if p)

    def _value(self, label):
        return float(minority_position(label))


class DriverClassical(Protocol):
    """
    Exit with probability alpha at each ramp, independent draw per ramp. Trial value is payoff.
    """
    __slots__ = ('__alpha', '__spec')
    name = 'driver_classical'

    def __init__(self, alpha: float = 1. / 3., spec: Optional[DriverSpec] = None):
        self.__alpha = check_real(alpha, 'alpha', 0., 1.)
        self.__spec = spec or DriverSpec()

    def _args(self):
        return self.__alpha, self.__spec

    @property
    def params(self):
        first, second, cont = self.__spec
        return {'alpha': self.__alpha, 'payoff_exit_first': first, 'payoff_exit_second': second,
                'payoff_continue': cont}

    def analytic(self):
        return driver_expected_payoff(self.__alpha, self.__spec)

    def sample(self, generator, size):
        first, second, cont = self.__spec
        draws = generator.random((size, 2))
        return where(draws[:, 0] < self.__alpha, first, where(draws[:, 1] < self.__alpha, second, cont))


class DriverQuantum(_StateProtocol):
    """
    Strategy state collapsed once, bit n is read at ramp n. Trial value is payoff.
    """
    __slots__ = ('__spec', '__state')
    name = 'driver_quantum'

    def __init__(self, spec: Optional[DriverSpec] = None, state: Optional[StateVector] = None):
        self.__spec = spec or DriverSpec()
        self.__state = driver_state() if state is None else state

    def _args(self):
        return self.__spec, self.__state

    @property
    def state(self):
        return self.__state

    @property
    def params(self):
        first, second, cont = self.__spec
        return {'payoff_exit_first': first, 'payoff_exit_second': second, 'payoff_continue': cont}

    def analytic(self):
        return driver_state_payoff(self.__state, self.__spec)

    def _value(self, label):
        first, second, cont = self.__spec
        if label[0] == '1':
            return first
        elif label[1] == '1':
            return second
        return cont


class GamblePlay(Protocol):
    """
    Second gamble offered after unresolved plays turned the reset reference. Trial value is 1 on acceptance.

    Without theta the angle is calibrated to the reference acceptance rate with unknown outcome.
    """
    __slots__ = ('__theta', '__plays', '__gamble', '__acceptance')
    name = 'gamble_play'

    def __init__(self, theta: Optional[float] = None, plays: int = 1, gamble: Optional[GambleSpec] = None):
        self.__gamble = gamble or GambleSpec()
        if theta is None:
            theta = fit_rotation_angle(disjunction_reference_data().unknown, gamble=self.__gamble)
        self.__theta = check_real(theta, 'theta')
        self.__plays = plays
        reference = play_unresolved(reset_reference(self.__gamble), self.__theta, plays)
        self.__acceptance = acceptance_probability(reference)

    def _args(self):
        return self.__theta, self.__plays, self.__gamble

    @property
    def params(self):
        return {'theta': self.__theta, 'plays': self.__plays, 'win_amount': self.__gamble.win_amount,
                'loss_amount': self.__gamble.loss_amount}

    @property
    def acceptance(self) -> float:
        return self.__acceptance

    def analytic(self):
        return self.acceptance

    def sample(self, generator, size):
        return (generator.random(size) < self.acceptance).astype(float64)


protocols: Dict[str, Type[Protocol]] = {x.name: x for x in (MazeClassical, MazeQuantum, MazeMinority,
                                                             DriverClassical, DriverQuantum, GamblePlay)}


def get_protocol(name: str, **params) -> Protocol:
    """
    Protocol by registry name.

    :param params: constructor arguments of protocol
    """
    try:
        cls = protocols[name]
    except (KeyError, TypeError):
        raise UnknownProtocol(f'unknown protocol {name!r}. available: {", ".join(protocols)}')
    return cls(**params)


__all__ = ['Protocol', 'MazeClassical', 'MazeQuantum', 'MazeMinority', 'DriverClassical', 'DriverQuantum',
           'GamblePlay', 'protocols', 'get_protocol']
