"""Binary-expansion combinatorics.

The codified binary expansion (cbe) of a positive integer is the run-length
encoding ``(n1, z1, n2, z2, ...)`` of its binary digits read from the most
significant bit: ``n1`` ones, then ``z1`` zeros, then ``n2`` ones, and so on.
Binomial parity is decided by Lucas' theorem (``C(n, k)`` is odd iff ``k`` is
a bitwise submask of ``n``); nothing here ever touches a factorial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Cbe",
    "BitNat",
    "to_cbe",
    "from_cbe",
    "rl",
    "e_of",
    "alpha",
    "mu",
    "nu",
    "is_power_of_two",
    "binom_parity",
    "is_submask",
    "max_submask_leq",
]


@dataclass(frozen=True)
class Cbe:
    """Run-length blocks ``(n1, z1, n2, ...)``; odd length iff the integer is odd."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("cbe must have at least one block")
        if any(b < 1 for b in self.blocks):
            raise ValueError(f"cbe entries must be positive: {self.blocks}")

    @property
    def ones(self) -> tuple[int, ...]:
        """The one-block lengths n1, n2, ..., n_omega."""
        return self.blocks[0::2]

    @property
    def zeros(self) -> tuple[int, ...]:
        """The zero-block lengths z1, z2, ... (z_omega absent for odd m)."""
        return self.blocks[1::2]

    @property
    def omega(self) -> int:
        return len(self.ones)

    @property
    def value(self) -> int:
        return from_cbe(self)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i):
        return self.blocks[i]


@dataclass(frozen=True)
class BitNat:
    """A non-negative integer with bit-indexed access (bit i is the 2^i coefficient)."""

    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("BitNat must be non-negative")

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return (self.value >> i) & 1

    @property
    def width(self) -> int:
        """mu + 1 for value >= 1, 0 for value 0."""
        return self.value.bit_length()

    def bits(self) -> list[int]:
        """b_0, b_1, ..., b_mu."""
        return [(self.value >> i) & 1 for i in range(self.width)]


def to_cbe(m: int) -> Cbe:
    if m < 1:
        raise ValueError(f"cbe is defined for m >= 1, got {m}")
    blocks = []
    digits = bin(m)[2:]
    run, count = digits[0], 0
    for d in digits:
        if d == run:
            count += 1
        else:
            blocks.append(count)
            run, count = d, 1
    blocks.append(count)
    return Cbe(tuple(blocks))


def from_cbe(c: Cbe | Sequence[int]) -> int:
    blocks = c.blocks if isinstance(c, Cbe) else tuple(c)
    if not blocks or any(b < 1 for b in blocks):
        raise ValueError(f"cbe entries must be positive: {blocks}")
    return rl((1 - i % 2, b) for i, b in enumerate(blocks))


def rl(pairs: Iterable[tuple[int, int]], leading_zeros: bool = False) -> int:
    """Integer from a run-length literal, most significant run first.

    ``rl([(1, 1), (0, 2), (1, 2), (0, 3)])`` is ``1^1 0^2 1^2 0^3 = 0b10011000``.
    Zero repeat counts are skipped. A leading run of zeros is rejected unless
    ``leading_zeros`` is set, since it is almost always a transcription slip.
    """
    value = 0
    seen_one = False
    for digit, count in pairs:
        if digit not in (0, 1):
            raise ValueError(f"run-length digit must be 0 or 1, got {digit}")
        if count < 0:
            raise ValueError(f"negative repeat count {count}")
        if count == 0:
            continue
        if digit == 0 and not seen_one and not leading_zeros:
            raise ValueError("run-length literal starts with a non-empty block of zeros")
        seen_one = seen_one or digit == 1
        value = (value << count) | (((1 << count) - 1) if digit else 0)
    return value


def e_of(m: int) -> int:
    """Length of the terminal block of ones in binary; 0 for even m."""
    if m < 1:
        raise ValueError(f"e(m) is defined for m >= 1, got {m}")
    return ((m + 1) & -(m + 1)).bit_length() - 1


def alpha(m: int) -> int:
    return bin(m).count("1")


def mu(m: int) -> int:
    if m < 1:
        raise ValueError(f"mu(m) is defined for m >= 1, got {m}")
    return m.bit_length() - 1


def nu(m: int) -> int:
    if m < 1:
        raise ValueError(f"nu(m) is defined for m >= 1, got {m}")
    return (m & -m).bit_length() - 1


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def is_submask(a: int, n: int) -> bool:
    return a & ~n == 0


def binom_parity(n: int, k: int) -> int:
    """C(n, k) mod 2 via Lucas: odd iff k is a submask of n. Zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binom_parity takes non-negative arguments")
    return 1 if k & ~n == 0 else 0


def max_submask_leq(e: int, cap: int) -> int:
    """Largest submask ``a`` of ``e`` with ``a <= cap``.

    Greedy from the top bit: while the prefix of ``a`` still equals that of
    ``cap`` ("tight"), a bit of ``e`` can be taken only where ``cap`` has a one;
    once ``a`` drops strictly below ``cap`` every remaining bit of ``e`` is free.
    """
    if e < 0 or cap < 0:
        raise ValueError("max_submask_leq takes non-negative arguments")
    if e <= cap:
        return e
    a = 0
    for b in range(max(e.bit_length(), cap.bit_length()) - 1, -1, -1):
        eb = (e >> b) & 1
        cb = (cap >> b) & 1
        if cb:
            if eb:
                a |= 1 << b
            else:
                # strictly below cap from here on
                return a | (e & ((1 << b) - 1))
    return a
