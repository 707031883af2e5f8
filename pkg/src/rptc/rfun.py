"""The recursive schedule ``(d_l, r_l)`` and the bound ``r(m)`` on s(m).

For ``m`` with ``m + 1`` not a power of two, let ``e = e(m)``, ``k`` the least
integer with ``2^k > m``, ``d_0 = 2^k - m - 1`` (the bitwise complement of
``m`` inside ``k`` bits) and ``d_l = d_0 - 2^e * l`` for ``l = 0..t`` where
``d_t = 2^e``. Walking ``l`` upward, ``r_l`` is the floor of the remaining
numerator ``m - (2^e - 1) - sum_{i<l} d_i r_i`` by ``d_l`` when
``C(m + d_l, d_l)`` is odd and 0 otherwise; ``r(m) = 1 + sum r_l``.

Two evaluators are provided. ``literal_schedule`` walks every ``l``. The
default ``r_schedule`` jumps straight to the next ``l`` that can contribute:
``C(m + d, d)`` is odd iff adding ``d`` to ``m`` has no carries, i.e. iff
``d`` is a submask of ``d_0``, and ``r_l > 0`` additionally needs
``d_l <= numerator``. So the next non-zero entry sits at
``max_submask_leq(d_0, numerator)``. Zero entries are regenerated on demand by
``RSchedule.entries``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .binexp import binom_parity, e_of, is_power_of_two, max_submask_leq
from .errors import ConsistencyError, PowerOfTwoSuccessor

__all__ = ["ScheduleEntry", "RSchedule", "r_schedule", "literal_schedule", "r_of", "r_defined"]


@dataclass(frozen=True)
class ScheduleEntry:
    ell: int
    d: int
    parity_odd: int
    numerator: int
    r: int


@dataclass(frozen=True)
class RSchedule:
    m: int
    e: int
    k: int
    d0: int
    t: int
    nonzero: tuple[ScheduleEntry, ...]
    r: int

    @property
    def step(self) -> int:
        return 1 << self.e

    def d(self, ell: int) -> int:
        return self.d0 - self.step * ell

    def entries(self) -> Iterator[ScheduleEntry]:
        """Every l = 0..t, zero entries included, in order."""
        numerator = self.m - (self.step - 1)
        nz = iter(self.nonzero)
        nxt = next(nz, None)
        for ell in range(self.t + 1):
            d = self.d(ell)
            if nxt is not None and nxt.ell == ell:
                yield nxt
                numerator -= nxt.d * nxt.r
                nxt = next(nz, None)
            else:
                yield ScheduleEntry(ell, d, binom_parity(self.m + d, d), numerator, 0)

    def as_pairs(self) -> list[tuple[int, int]]:
        """Non-zero entries as ``(d_l, r_l)``."""
        return [(x.d, x.r) for x in self.nonzero]


def r_defined(m: int) -> bool:
    return m >= 1 and not is_power_of_two(m + 1)


def _setup(m: int) -> tuple[int, int, int, int]:
    if m < 1:
        raise ValueError(f"r(m) needs m >= 1, got {m}")
    if is_power_of_two(m + 1):
        raise PowerOfTwoSuccessor(m)
    e = e_of(m)
    k = m.bit_length()
    d0 = (1 << k) - m - 1
    t = (d0 - (1 << e)) >> e
    return e, k, d0, t


def _check(sched: RSchedule) -> None:
    m, e, step = sched.m, sched.e, sched.step
    if sched.d0 % step or sched.d(sched.t) != step:
        raise ConsistencyError(f"m={m}: d_t != 2^e")
    nz = sched.nonzero
    if not nz or nz[0].ell != 0:
        raise ConsistencyError(f"m={m}: r_0 is zero")
    if not binom_parity(m + step, step):
        raise ConsistencyError(f"m={m}: C(m + d_t, d_t) is even")
    total = 0
    for x in nz:
        if x.numerator < 0:
            raise ConsistencyError(f"m={m}: negative numerator at l={x.ell}")
        if not x.parity_odd or x.r != x.numerator // x.d or x.d != sched.d(x.ell):
            raise ConsistencyError(f"m={m}: malformed entry {x}")
        total += x.d * x.r
    if nz[-1].numerator % step:
        raise ConsistencyError(f"m={m}: final numerator not divisible by 2^e")
    if total != m - (step - 1):
        raise ConsistencyError(f"m={m}: sum d_l r_l = {total} != m - (2^e - 1)")
    if sched.r != 1 + sum(x.r for x in nz):
        raise ConsistencyError(f"m={m}: r != 1 + sum r_l")


@lru_cache(maxsize=65536)
def r_schedule(m: int) -> RSchedule:
    e, k, d0, t = _setup(m)
    step = 1 << e
    numerator = m - (step - 1)
    entries = []
    cap = d0
    while numerator > 0:
        d = max_submask_leq(d0, min(cap, numerator))
        if d < step:
            raise ConsistencyError(f"m={m}: numerator {numerator} left with no usable d")
        parity = binom_parity(m + d, d)
        if not parity:
            raise ConsistencyError(f"m={m}: submask d={d} has even parity")
        r = numerator // d
        entries.append(ScheduleEntry((d0 - d) >> e, d, parity, numerator, r))
        numerator -= d * r
        cap = d - step
    sched = RSchedule(m, e, k, d0, t, tuple(entries), 1 + sum(x.r for x in entries))
    _check(sched)
    return sched


def literal_schedule(m: int) -> RSchedule:
    """Walks every l = 0..t exactly as the recursion is written. O(t)."""
    e, k, d0, t = _setup(m)
    step = 1 << e
    numerator = m - (step - 1)
    entries = []
    for ell in range(t + 1):
        d = d0 - step * ell
        if numerator < 0:
            raise ConsistencyError(f"m={m}: negative numerator at l={ell}")
        parity = binom_parity(m + d, d)
        r = numerator // d if parity else 0
        if r:
            entries.append(ScheduleEntry(ell, d, parity, numerator, r))
            numerator -= d * r
    sched = RSchedule(m, e, k, d0, t, tuple(entries), 1 + sum(x.r for x in entries))
    _check(sched)
    return sched


def r_of(m: int) -> int:
    return r_schedule(m).r
