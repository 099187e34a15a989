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
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from logging import info
from typing import Optional, Union
from .protocols import Protocol, get_protocol
from .rng import RngStream, block_size
from .stats import SummaryStats
from ..algorithms import Moments


def _run_block(protocol: Protocol, stream: RngStream, block: int, size: int) -> Moments:
    """
    Moments of one block of trials. Module level function for pickling into worker processes.
    """
    return Moments.from_array(protocol.sample(stream.generator(block), size))


def run_trials(protocol: Union[str, Protocol], n: int, stream: Optional[RngStream] = None, *,
               workers: int = 1, **params) -> SummaryStats:
    """
    Monte Carlo estimate of protocol trial mean.

    Trials are split into blocks of fixed size, each block drawn from own counter range of the stream.
    Block moments are merged in block order, so result depends only on seed, stream_id and n.

    :param protocol: protocol object or registry name
    :param stream: random stream. RngStream(0, 0) if None
    :param workers: number of worker processes. 1 runs in current process
    :param params: protocol constructor arguments if protocol given by name
    """
    if isinstance(protocol, str):
        protocol = get_protocol(protocol, **params)
    elif params:
        raise TypeError('params are allowed only with protocol name')
    elif not isinstance(protocol, Protocol):
        raise TypeError('Protocol or protocol name expected')
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError('n should be int')
    if n < 1:
        raise ValueError('n should be positive')
    if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
        raise ValueError('workers should be positive int')
    if stream is None:
        stream = RngStream()

    blocks = range((n + block_size - 1) // block_size)
    sizes = [min(block_size, n - x * block_size) for x in blocks]
    info(f'{protocol.name}: {n} trials in {len(sizes)} blocks, seed {stream.seed}, stream {stream.stream_id}')
    if workers == 1 or len(sizes) == 1:
        parts = [_run_block(protocol, stream, x, s) for x, s in zip(blocks, sizes)]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(sizes))) as executor:
            parts = list(executor.map(_run_block, [protocol] * len(sizes), [stream] * len(sizes), blocks, sizes))
    return SummaryStats.from_moments(reduce(Moments.merge, parts))


__all__ = ['run_trials']
