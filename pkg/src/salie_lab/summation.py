"""Compensated summation helpers.

``fsum_real``/``fsum_complex`` are exactly rounded (``math.fsum``), hence
independent of term order.  Streams of blocks are reduced block-by-block in a
fixed order, so results depend only on the block size, never on workers.
``KahanVector`` keeps a vector of Neumaier-compensated running sums and is
used where many sums advance in lock-step (one per row of a bilinear form).
"""

from __future__ import annotations

import math
from collections.abc import Iterable

import numpy as np

BLOCK = 1 << 20


def fsum_real(values: Iterable[float] | np.ndarray) -> float:
    if isinstance(values, np.ndarray):
        return math.fsum(values.ravel().tolist())
    return math.fsum(values)


def fsum_complex(values: np.ndarray | Iterable[complex]) -> complex:
    if not isinstance(values, np.ndarray):
        values = np.array(list(values), dtype=np.complex128)
    values = values.ravel()
    if not np.iscomplexobj(values):
        return complex(math.fsum(values.tolist()), 0.0)
    return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))


def fsum_blocks(blocks: Iterable[np.ndarray]) -> complex:
    """Sum a stream of arrays: exact per block, then exact over block partials."""
    re: list[float] = []
    im: list[float] = []
    for block in blocks:
        s = fsum_complex(np.asarray(block))
        re.append(s.real)
        im.append(s.imag)
    return complex(math.fsum(re), math.fsum(im))


class KahanVector:
    """Vector of Neumaier-compensated real accumulators."""

    def __init__(self, size: int):
        self.total = np.zeros(size)
        self.comp = np.zeros(size)

    def add(self, values: np.ndarray) -> None:
        t = self.total + values
        big = np.abs(self.total) >= np.abs(values)
        self.comp += np.where(big, (self.total - t) + values, (values - t) + self.total)
        self.total = t

    def result(self) -> np.ndarray:
        return self.total + self.comp


class ComplexKahanVector:
    def __init__(self, size: int):
        self.re = KahanVector(size)
        self.im = KahanVector(size)

    def add(self, values: np.ndarray) -> None:
        self.re.add(np.real(values))
        if np.iscomplexobj(values):
            self.im.add(values.imag)

    def result(self) -> np.ndarray:
        return self.re.result() + 1j * self.im.result()
