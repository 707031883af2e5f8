"""Dense truncated polynomial ring GF(2)[x1..xs] / (x_i^{m+1}).

A polynomial is a Python int used as a bit array: the monomial
``x1^a1 ... xs^as`` lives at bit ``sum a_i (m+1)^(i-1)``. Multiplying by
``x_i`` is a left shift by ``(m+1)^(i-1)`` after clearing the monomials whose
``x_i`` exponent is already ``m``. Used only as a brute-force oracle.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["TruncatedRing", "DEFAULT_MAX_BITS"]

DEFAULT_MAX_BITS = 13**5


class TruncatedRing:
    def __init__(self, m: int, s: int, max_bits: int = DEFAULT_MAX_BITS):
        if m < 0 or s < 1:
            raise ValueError(f"bad ring parameters m={m}, s={s}")
        size = (m + 1) ** s
        if size > max_bits:
            raise ValueError(f"ring with (m+1)^s = {size} monomials exceeds the guard {max_bits}")
        self.m, self.s, self.size = m, s, size
        self._stride = [(m + 1) ** i for i in range(s)]
        self._keep = [_keep_mask(m, s, i) for i in range(s)]

    def one(self) -> int:
        return 1

    def monomial(self, exps) -> int:
        if len(exps) != self.s or any(not 0 <= a <= self.m for a in exps):
            return 0
        return 1 << sum(a * st for a, st in zip(exps, self._stride))

    def coefficient(self, poly: int, exps) -> int:
        if len(exps) != self.s or any(not 0 <= a <= self.m for a in exps):
            return 0
        return (poly >> sum(a * st for a, st in zip(exps, self._stride))) & 1

    def mul_var(self, poly: int, i: int) -> int:
        """poly * x_{i+1} (0-based variable index)."""
        return (poly & self._keep[i]) << self._stride[i]

    def mul_sum(self, poly: int, i: int, j: int) -> int:
        """poly * (x_{i+1} + x_{j+1})."""
        return self.mul_var(poly, i) ^ self.mul_var(poly, j)

    def terms(self, poly: int):
        """Exponent tuples of the monomials present in poly."""
        out = []
        b = 0
        while poly:
            if poly & 1:
                exps, rest = [], b
                for _ in range(self.s):
                    rest, a = divmod(rest, self.m + 1)
                    exps.append(a)
                out.append(tuple(exps))
            poly >>= 1
            b += 1
        return out


@lru_cache(maxsize=256)
def _keep_mask(m: int, s: int, i: int) -> int:
    """Bits whose x_{i+1} exponent is below m (those survive multiplication by x_{i+1})."""
    stride = (m + 1) ** i
    block = ((1 << (m * stride)) - 1)  # exponents 0..m-1 of x_{i+1}, all lower variables
    period = (m + 1) * stride
    reps = (m + 1) ** s // period
    # block repeated reps times at spacing period: block * sum_r 2^(r*period)
    return block * (((1 << (period * reps)) - 1) // ((1 << period) - 1))
