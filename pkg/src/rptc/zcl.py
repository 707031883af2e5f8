"""Zero-divisor cup-length of RP^m and the gap G_s(m) = s*m - zcl_s(RP^m).

H^*((RP^m)^s; Z_2) = Z_2[x1..xs] / (x_i^{m+1}), and the ideal of zero-divisors
is generated by the classes ``x1 + xj`` (2 <= j <= s). A non-zero product of N
zero-divisors expands into a non-zero product of N generators, so zcl_s is the
largest total exponent of a non-vanishing product

    (x1 + x2)^{e2} (x1 + x3)^{e3} ... (x1 + xs)^{es}.

Expanding, the monomial ``x1^{sum c_j} x2^{a2} ... xs^{as}`` (``c_j = e_j - a_j``)
arises from exactly one choice of the ``a_j``, with coefficient
``prod C(e_j, a_j)``; by Lucas that is odd iff every ``a_j`` is a submask of
``e_j``. Each ``x_j`` (j >= 2) sits in a single factor, so the product is
non-zero iff ``sum_j min_cost(m, e_j) <= m`` where ``min_cost`` is the least
``x1`` exponent a factor can contribute. zcl_s is then a knapsack: pick s - 1
exponents in ``[0, 2m]`` (larger ones always vanish) of total cost at most m,
maximising their sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .binexp import binom_parity, e_of, is_power_of_two, max_submask_leq
from .errors import CertificateInvalid, PowerOfTwoSuccessor, TheoremViolation
from .polyring import DEFAULT_MAX_BITS, TruncatedRing
from .rfun import r_defined, r_schedule

__all__ = [
    "FactorVector",
    "Certificate",
    "GapRow",
    "StabilizationReport",
    "GapEngine",
    "min_cost",
    "product_nonzero",
    "brute_product_nonzero",
    "zcl_s",
    "gap_table",
    "stabilization",
    "formulota_certificate",
    "gap_limit",
]


@dataclass(frozen=True)
class FactorVector:
    """Exponents ``(e2, ..., es)`` of the factors ``(x1 + xj)``."""

    m: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        for e in self.exponents:
            if not 0 <= e <= 2 * self.m:
                raise ValueError(f"factor exponent {e} outside [0, 2m] for m={self.m}")

    @property
    def s(self) -> int:
        return len(self.exponents) + 1

    @property
    def degree(self) -> int:
        return sum(self.exponents)


@lru_cache(maxsize=1 << 16)
def _comb_parity(n: int, k: int) -> int:
    return math.comb(n, k) & 1


@dataclass(frozen=True)
class Certificate:
    """Odd coefficient of ``x1^{a1} x2^{a2} ... xs^{as}`` in the product of ``factors``.

    ``splits[j] = (a_j, c_j)`` with ``c_j = e_j - a_j`` the ``x1`` exponent taken
    from factor j.
    """

    factors: FactorVector
    witness_monomial: tuple[int, ...]
    splits: tuple[tuple[int, int], ...]

    def problems(self) -> list[str]:
        """Re-checks everything from scratch; parity via exact binomials, not Lucas."""
        m = self.factors.m
        exps = self.factors.exponents
        out = []
        if len(self.witness_monomial) != len(exps) + 1 or len(self.splits) != len(exps):
            return ["shape mismatch"]
        if any(not 0 <= a <= m for a in self.witness_monomial):
            out.append("witness exponent outside [0, m]")
        for j, (e, (a, c)) in enumerate(zip(exps, self.splits)):
            if a + c != e or a < 0 or c < 0:
                out.append(f"factor {j + 2}: split {a}+{c} != {e}")
            elif a != self.witness_monomial[j + 1]:
                out.append(f"factor {j + 2}: x_{j + 2} exponent mismatch")
            elif not _comb_parity(e, a):
                out.append(f"factor {j + 2}: C({e}, {a}) is even")
        if sum(c for _, c in self.splits) != self.witness_monomial[0]:
            out.append("x1 exponent != sum of contributions")
        return out

    def is_valid(self) -> bool:
        return not self.problems()


@dataclass(frozen=True)
class GapRow:
    m: int
    s: int
    zcl: int
    gap: int
    witness: Optional[FactorVector] = None


@dataclass(frozen=True)
class StabilizationReport:
    m: int
    G_limit: int
    s_of_m: int
    r_of_m: Optional[int]
    gap_sequence: tuple[int, ...]

    @property
    def s_equals_r(self) -> Optional[bool]:
        return None if self.r_of_m is None else self.s_of_m == self.r_of_m


def gap_limit(m: int) -> int:
    """2^{e(m)} - 1, the stable value of G_s(m)."""
    return (1 << e_of(m)) - 1


def min_cost(m: int, e: int) -> int:
    """Least x1 exponent a factor ``(x1 + xj)^e`` can contribute to a surviving odd term."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if not 0 <= e <= 2 * m:
        raise ValueError(f"exponent {e} outside [0, 2m] for m={m}")
    return e - max_submask_leq(e, m)


def product_nonzero(v: FactorVector) -> tuple[bool, Optional[Certificate]]:
    m = v.m
    splits = []
    for e in v.exponents:
        a = max_submask_leq(e, m)
        splits.append((a, e - a))
    x1 = sum(c for _, c in splits)
    if x1 > m:
        return False, None
    cert = Certificate(v, (x1,) + tuple(a for a, _ in splits), tuple(splits))
    return True, cert


def brute_product_nonzero(
    v: FactorVector, max_m: int = 12, max_s: int = 5, max_bits: int = DEFAULT_MAX_BITS
) -> bool:
    """Multiplies the factors out one ``(x1 + xj)`` at a time in the truncated ring."""
    if v.m > max_m or v.s > max_s:
        raise ValueError(f"brute oracle limited to m <= {max_m}, s <= {max_s}; got m={v.m}, s={v.s}")
    ring = TruncatedRing(v.m, v.s, max_bits=max_bits)
    poly = ring.one()
    for j, e in enumerate(v.exponents, start=1):
        for _ in range(e):
            poly = ring.mul_sum(poly, 0, j)
            if not poly:
                return False
    return poly != 0


class GapEngine:
    """Incremental knapsack for zcl_s(RP^m), one extra factor per step.

    ``best[k][W]`` is the largest total exponent of k factors whose total
    min_cost is at most W. Only Pareto-optimal (cost, exponent) items enter the
    DP; witnesses are rebuilt against the full item set.
    """

    def __init__(self, m: int):
        if m < 1:
            raise ValueError(f"m must be positive, got {m}")
        self.m = m
        cost = np.array([min_cost(m, e) for e in range(2 * m + 1)], dtype=np.int64)
        self.exps = np.arange(2 * m + 1, dtype=np.int64)
        self.cost = cost
        best_at = {}
        for e, c in enumerate(cost.tolist()):
            if c <= m and e > best_at.get(c, -1):
                best_at[c] = e
        items, top = [], -1
        for c in sorted(best_at):
            if best_at[c] > top:
                items.append((c, best_at[c]))
                top = best_at[c]
        self.items = items
        self.best = [np.zeros(m + 1, dtype=np.int64)]

    def _extend(self, k: int) -> None:
        m = self.m
        while len(self.best) <= k:
            prev = self.best[-1]
            new = np.full(m + 1, -1, dtype=np.int64)
            for c, v in self.items:
                np.maximum(new[c:], prev[: m + 1 - c] + v, out=new[c:])
            self.best.append(new)

    def zcl(self, s: int) -> int:
        if s < 2:
            raise ValueError(f"s must be >= 2, got {s}")
        self._extend(s - 1)
        return int(self.best[s - 1][self.m])

    def witness(self, s: int) -> FactorVector:
        """Lexicographically smallest exponent vector attaining zcl_s."""
        target = self.zcl(s)
        budget, out = self.m, []
        for k in range(s - 1, 0, -1):
            ok = self.cost <= budget
            rest = self.best[k - 1][np.where(ok, budget - self.cost, 0)]
            hit = np.nonzero(ok & (self.exps + rest >= target))[0]
            e = int(hit[0])
            out.append(e)
            target -= e
            budget -= int(self.cost[e])
        return FactorVector(self.m, tuple(out))

    def row(self, s: int, witness: bool = True) -> GapRow:
        z = self.zcl(s)
        return GapRow(self.m, s, z, s * self.m - z, self.witness(s) if witness else None)


def zcl_s(m: int, s: int, witness: bool = True) -> GapRow:
    row = GapEngine(m).row(s, witness)
    if witness:
        ok, cert = product_nonzero(row.witness)
        if not ok or row.witness.degree != row.zcl or not cert.is_valid():
            raise TheoremViolation(f"zcl witness for m={m}, s={s} does not certify")
    return row


def _check_rows(m: int, rows: Sequence[GapRow]) -> None:
    lim = gap_limit(m)
    prev = None
    for row in rows:
        if row.gap < lim:
            raise TheoremViolation(f"G_{row.s}({m}) = {row.gap} < 2^e - 1 = {lim}")
        if prev is not None and row.gap > prev:
            raise TheoremViolation(f"G_s({m}) increases at s={row.s}: {prev} -> {row.gap}")
        prev = row.gap


def gap_table(m: int, s_max: int, witness: bool = False) -> list[GapRow]:
    if s_max < 2:
        raise ValueError(f"s_max must be >= 2, got {s_max}")
    eng = GapEngine(m)
    rows = [eng.row(s, witness) for s in range(2, s_max + 1)]
    _check_rows(m, rows)
    return rows


def stabilization(m: int) -> StabilizationReport:
    """Smallest s >= 2 with G_s(m) = 2^{e(m)} - 1, searched no further than r(m)."""
    lim = gap_limit(m)
    if r_defined(m):
        r = r_schedule(m).r
        s_cap = r
    else:
        r = None
        s_cap = 2  # m = 2^e - 1 stabilises immediately
    eng = GapEngine(m)
    rows = []
    for s in range(2, s_cap + 1):
        rows.append(eng.row(s, witness=False))
        _check_rows(m, rows[-2:])
        if rows[-1].gap == lim:
            return StabilizationReport(m, lim, s, r, tuple(x.gap for x in rows))
    raise TheoremViolation(
        f"G_s({m}) has not reached {lim} by s = {s_cap}" + (" = r(m)" if r is not None else "")
    )


def formulota_certificate(m: int) -> Certificate:
    """The product built from the r-schedule: r_l factors of exponent m + d_l each.

    With s = r(m) it certifies ``x1^{m - (2^e - 1)} x2^m ... xs^m``, so
    G_{r(m)}(m) <= 2^e - 1.
    """
    sched = r_schedule(m)
    exps, splits = [], []
    for x in sched.nonzero:
        exps += [m + x.d] * x.r
        splits += [(m, x.d)] * x.r
    lim = (1 << sched.e) - 1
    a1 = m - lim
    v = FactorVector(m, tuple(exps))
    cert = Certificate(v, (a1,) + (m,) * len(exps), tuple(splits))
    if v.s != sched.r:
        raise CertificateInvalid(f"m={m}: {v.s} variables but r(m) = {sched.r}")
    if v.degree != sched.r * m - lim:
        raise CertificateInvalid(f"m={m}: total degree {v.degree} != s*m - (2^e - 1)")
    if any(not binom_parity(e, a) for e, (a, _) in zip(exps, splits)):
        raise CertificateInvalid(f"m={m}: a factor has even coefficient")
    probs = cert.problems()
    if probs:
        raise CertificateInvalid(f"m={m}: " + "; ".join(probs))
    return cert
