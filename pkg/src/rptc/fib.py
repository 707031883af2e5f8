"""Parity pattern of C(3i + 1, i) over dyadic windows of even i.

The reference series is built by the recursion ``f_0 = 1``, ``f_1 = 11``,
``f_c = f_{c-1} f_{c-2} 0^{2^{c-2}}`` (so ``|f_c| = 2^c`` and each ``f_c`` is a
prefix of the next). For l >= 2 the parities of C(3i + 1, i), i even in
``[2^l, 2^{l+1} - 2]``, should read as the first ``2^{l-2}`` series terms
followed by ``2^{l-2}`` zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Optional

import numpy as np

__all__ = ["ParityWord", "iter_series", "series_prefix", "parity_window", "check_pattern", "PatternReport"]


@dataclass(frozen=True)
class ParityWord:
    bits: tuple[int, ...]

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))

    def runs(self) -> list[tuple[int, int]]:
        """Run-length form ``[(bit, count), ...]``."""
        out: list[list[int]] = []
        for b in self.bits:
            if out and out[-1][0] == b:
                out[-1][1] += 1
            else:
                out.append([b, 1])
        return [(b, n) for b, n in out]


def iter_series() -> Iterator[int]:
    """Yields the infinite series one bit at a time.

    Only the two most recent blocks are kept: once ``f_{c-1}`` has been emitted,
    the new tail of ``f_c`` is ``f_{c-2}`` then ``2^{c-2}`` zeros.
    """
    older, newer = np.array([1], dtype=np.uint8), np.array([1, 1], dtype=np.uint8)
    yield 1
    yield 1
    c = 2
    while True:
        tail = np.concatenate([older, np.zeros(1 << (c - 2), dtype=np.uint8)])
        yield from tail.tolist()
        older, newer = newer, np.concatenate([newer, tail])
        c += 1


def series_prefix(length: int) -> ParityWord:
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    return ParityWord(tuple(islice(iter_series(), length)))


def parity_window(ell: int) -> ParityWord:
    """Parities of C(3i + 1, i) for even i in [2^ell, 2^{ell+1} - 2], increasing i."""
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    i = np.arange(1 << ell, 1 << (ell + 1), 2, dtype=np.int64)
    odd = (i & ~(3 * i + 1)) == 0  # Lucas: i a submask of 3i + 1
    return ParityWord(tuple(odd.astype(np.uint8).tolist()))


@dataclass(frozen=True)
class PatternReport:
    ell_max: int
    checked: tuple[int, ...]
    first_failure: Optional[int]

    @property
    def ok(self) -> bool:
        return self.first_failure is None


def check_pattern(ell_max: int) -> PatternReport:
    if ell_max < 2:
        raise ValueError(f"ell_max must be >= 2, got {ell_max}")
    half = 1 << (ell_max - 2)
    series = np.fromiter(islice(iter_series(), half), dtype=np.uint8, count=half)
    checked = []
    for ell in range(2, ell_max + 1):
        n = 1 << (ell - 2)
        expected = np.concatenate([series[:n], np.zeros(n, dtype=np.uint8)])
        got = np.array(parity_window(ell).bits, dtype=np.uint8)
        checked.append(ell)
        if not np.array_equal(got, expected):
            return PatternReport(ell_max, tuple(checked), ell)
    return PatternReport(ell_max, tuple(checked), None)
