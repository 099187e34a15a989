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
from numpy.random import Generator, Philox
from ..exceptions import OutOfRange


block_size = 65536  # trials per block
_max_word = 2 ** 64


def _check_word(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f'{name} should be int')
    if not 0 <= value < _max_word:
        raise OutOfRange(f'{name} should be 64-bit unsigned integer')
    return value


class RngStream:
    """
    Reproducible random substream.

    Generator is NumPy Philox 4x64 keyed by (seed, stream_id) words. Streams of different keys never overlap.
    Block j of a stream starts at counter j * 2^64, so blocks are independent and may be drawn by any worker.
    """
    __slots__ = ('__seed', '__stream')

    def __init__(self, seed: int = 0, stream_id: int = 0):
        self.__seed = _check_word(seed, 'seed')
        self.__stream = _check_word(stream_id, 'stream_id')

    def __repr__(self):
        return f'{self.__class__.__name__}({self.__seed}, {self.__stream})'

    def __eq__(self, other):
        return isinstance(other, RngStream) and (self.__seed, self.__stream) == (other.seed, other.stream_id)

    def __hash__(self):
        return hash((self.__seed, self.__stream))

    def __reduce__(self):
        return self.__class__, (self.__seed, self.__stream)

    @property
    def seed(self) -> int:
        return self.__seed

    @property
    def stream_id(self) -> int:
        return self.__stream

    @property
    def key(self) -> int:
        """
        128-bit Philox key: seed in low word, stream_id in high word.
        """
        return self.__seed | self.__stream << 64

    def generator(self, block: int = 0) -> Generator:
        """
        Fresh generator positioned at the start of block.
        """
        if isinstance(block, bool) or not isinstance(block, int) or block < 0:
            raise ValueError('block should be non negative int')
        bits = Philox(key=self.key)
        if block:
            bits = bits.advance(block << 64)
        return Generator(bits)

    def substream(self, stream_id: int) -> 'RngStream':
        return RngStream(self.__seed, stream_id)


__all__ = ['RngStream', 'block_size']
