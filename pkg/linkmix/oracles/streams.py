import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, TypeVar

import numpy as np

from ..specfun import DomainError

#: Samples drawn by one stream, the unit of parallel work.
BLOCK_SIZE = 1 << 16

_T = TypeVar('_T')


@dataclass(frozen=True)
class McConfig:
    """
    Monte-Carlo configuration.

    :param seed: 64-bit root seed.
    :param n_samples: Total sample count, at least ``1000``.
    :param n_streams: Worker threads.

    Samples are cut into blocks of :data:`BLOCK_SIZE`, block ``k`` draws from its own Philox generator
    spawned from ``(seed, k)``. Results depend on ``seed`` and ``n_samples`` only, never on how the
    blocks are scheduled over the ``n_streams`` workers.
    """
    seed: int = 42
    n_samples: int = 1000000
    n_streams: int = 4

    def __post_init__(self):
        if isinstance(self.seed, bool) or int(self.seed) != self.seed or not 0 <= self.seed < 2 ** 64:
            raise DomainError(f'Seed should be a 64-bit unsigned integer, but {self.seed!r} found.')
        if int(self.n_samples) != self.n_samples or self.n_samples < 1000:
            raise DomainError(f'At least 1000 samples expected, but {self.n_samples!r} found.')
        if int(self.n_streams) != self.n_streams or self.n_streams < 1:
            raise DomainError(f'Stream count should be a positive integer, but {self.n_streams!r} found.')

    @property
    def block_sizes(self) -> List[int]:
        blocks = math.ceil(self.n_samples / BLOCK_SIZE)
        return [min(BLOCK_SIZE, self.n_samples - i * BLOCK_SIZE) for i in range(blocks)]


def block_generators(mc: McConfig) -> List[np.random.Generator]:
    """
    One independent counter-based generator per block.
    """
    children = np.random.SeedSequence(mc.seed).spawn(len(mc.block_sizes))
    return [np.random.Generator(np.random.Philox(child)) for child in children]


def run_blocks(mc: McConfig, func: Callable[[np.random.Generator, int], _T]) -> List[_T]:
    """
    Run ``func(generator, size)`` on every block with ``mc.n_streams`` threads, results in block order.
    """
    jobs = list(zip(block_generators(mc), mc.block_sizes))
    if mc.n_streams == 1:
        return [func(rng, size) for rng, size in jobs]
    with ThreadPoolExecutor(max_workers=mc.n_streams) as pool:
        return list(pool.map(lambda job: func(*job), jobs))
