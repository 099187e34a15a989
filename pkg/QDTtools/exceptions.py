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


class ZeroVector(ValueError):
    """
    all amplitudes are zero
    """


class BadDimension(ValueError):
    """
    amplitudes count is not a power of two or register is too large
    """


class BadLabel(ValueError):
    """
    basis label has wrong length or non-binary characters
    """


class BadPosition(IndexError):
    """
    register position out of range
    """


class ImpossibleCollapse(Exception):
    """
    measurement selected an outcome of zero probability
    """


class InvalidState(ValueError):
    """
    amplitudes are not finite or not normalized
    """


class BadFrequencies(ValueError):
    """
    frequencies are negative or do not sum to one
    """


class MissingEntry(KeyError):
    """
    conditional cognition table has no value for the pair
    """


class OutOfRange(ValueError):
    """
    numeric argument outside of its allowed interval
    """


class UnknownSymbol(KeyError):
    """
    symbol is not in the model alphabet
    """


class DegenerateGamble(ValueError):
    """
    win and loss amounts coincide
    """


class Unreachable(ValueError):
    """
    target is outside the attainable range of the acceptance rule
    """


class ProtocolExhausted(Exception):
    """
    no door showed 1. coding state is malformed
    """


class NoMinority(Exception):
    """
    collapsed register has no unique minority bit
    """


class UnknownProtocol(KeyError):
    """
    stochastic protocol name is not registered
    """


class CapExceeded(Exception):
    """
    classical maze run reached the tries cap
    """


class ParseError(ValueError):
    """
    bad survey file
    """
    def __init__(self, line: int, message: str):
        super().__init__(f'line {line}: {message}')
        self.line = line


class InvariantError(ValueError):
    """
    contingency table values do not add up
    """


class MismatchedTables(ValueError):
    """
    tables can't be compared
    """


class MappingError(ValueError):
    """
    category mapping is incomplete or invalid
    """


class DegenerateAfterExclusion(ValueError):
    """
    table collapses to a single category after exclusion
    """


class ImplementationError(Exception):
    """
    Algorithm cross-check failed. Please send the input to the developers.
    """
