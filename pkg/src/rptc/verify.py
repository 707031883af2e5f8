"""Exhaustive and randomised verification sweeps."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional

from .binexp import e_of
from .closedform import Case, classify, closed_r
from .errors import ConsistencyError
from .rfun import r_defined, r_schedule
from .zcl import (
    FactorVector,
    GapEngine,
    brute_product_nonzero,
    formulota_certificate,
    gap_limit,
    gap_table,
    product_nonzero,
    stabilization,
)

__all__ = [
    "ClosedFormRow",
    "verify_closed_forms",
    "OracleReport",
    "verify_oracle",
    "TheoremRow",
    "verify_theorems",
    "verify_certificates",
    "verify_knapsack",
    "exhaustive_zcl",
]


@dataclass(frozen=True)
class ClosedFormRow:
    m: int
    case: str
    r_predicted: int
    r_actual: int
    entries_match: bool

    @property
    def match(self) -> bool:
        return self.r_predicted == self.r_actual and self.entries_match


def verify_closed_forms(m_max: int, m_min: int = 2) -> list[ClosedFormRow]:
    """One row per even m in range that some closed form covers."""
    out = []
    for m in range(max(2, m_min + m_min % 2), m_max + 1, 2):
        if classify(m).case is Case.NONE:
            continue
        pred = closed_r(m)
        sched = r_schedule(m)
        out.append(ClosedFormRow(m, pred.case.value, pred.r_predicted, sched.r,
                                 pred.nonzero_entries == sched.as_pairs()))
    return out


@dataclass
class OracleReport:
    checked: int = 0
    nonzero: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _compare(v: FactorVector, rep: OracleReport) -> None:
    fast, cert = product_nonzero(v)
    slow = brute_product_nonzero(v)
    rep.checked += 1
    rep.nonzero += slow
    if fast != slow or (cert is not None and not cert.is_valid()):
        rep.mismatches.append(v)


def verify_oracle(
    exhaustive_m_max: int = 4,
    exhaustive_s_max: int = 3,
    random_m_max: int = 12,
    random_s_max: int = 5,
    samples: int = 10_000,
    seed: int = 0,
) -> OracleReport:
    """Fast non-vanishing test against literal expansion in the truncated ring.

    Every vector in ``[0, 2m]^{s-1}`` on the small grid, then ``samples``
    uniform random vectors for each (m, s) on the larger one.
    """
    rep = OracleReport()
    for m in range(1, exhaustive_m_max + 1):
        for s in range(2, exhaustive_s_max + 1):
            for exps in itertools.product(range(2 * m + 1), repeat=s - 1):
                _compare(FactorVector(m, exps), rep)
    rng = random.Random(seed)
    for m in range(1, random_m_max + 1):
        for s in range(2, random_s_max + 1):
            for _ in range(samples):
                exps = tuple(rng.randint(0, 2 * m) for _ in range(s - 1))
                _compare(FactorVector(m, exps), rep)
    return rep


@dataclass(frozen=True)
class TheoremRow:
    m: int
    e: int
    G_limit: int
    s_of_m: int
    r_of_m: Optional[int]
    gaps: tuple[int, ...]

    @property
    def s_equals_r(self) -> Optional[bool]:
        return None if self.r_of_m is None else self.s_of_m == self.r_of_m


def verify_theorems(m_max: int, m_min: int = 1) -> list[TheoremRow]:
    """Stable gap 2^e - 1 is reached and never undershot; s(m) <= r(m).

    Rows run one step past r(m) (past s = 2 when r is undefined) so that the
    stable value is seen to persist. Raises TheoremViolation on any failure.
    """
    out = []
    for m in range(m_min, m_max + 1):
        st = stabilization(m)
        top = (st.r_of_m if st.r_of_m is not None else 2) + 1
        rows = gap_table(m, top)
        gaps = tuple(r.gap for r in rows)
        if gaps[st.s_of_m - 2] != st.G_limit or gaps[-1] != st.G_limit:
            raise ConsistencyError(f"m={m}: table and stabilisation disagree")
        out.append(TheoremRow(m, e_of(m), st.G_limit, st.s_of_m, st.r_of_m, gaps))
    return out


def verify_certificates(m_max: int) -> int:
    """Builds and re-validates the r-schedule certificate for every valid m; returns the count."""
    n = 0
    for m in range(1, m_max + 1):
        if not r_defined(m):
            continue
        cert = formulota_certificate(m)
        sched = r_schedule(m)
        if cert.factors.degree != sched.r * m - gap_limit(m) or not cert.is_valid():
            raise ConsistencyError(f"m={m}: certificate failed re-validation")
        n += 1
    return n


def exhaustive_zcl(m: int, s: int) -> int:
    """max total exponent over all of [0, 2m]^{s-1}, non-vanishing decided by literal expansion."""
    best = 0
    for exps in itertools.product(range(2 * m + 1), repeat=s - 1):
        if sum(exps) <= best:
            continue
        if brute_product_nonzero(FactorVector(m, exps)):
            best = sum(exps)
    return best


def verify_knapsack(m_max: int = 8, s_max: int = 4) -> list[tuple[int, int, int, int]]:
    """``(m, s, knapsack, exhaustive)`` for every pair; callers compare the last two."""
    out = []
    for m in range(1, m_max + 1):
        eng = GapEngine(m)
        for s in range(2, s_max + 1):
            out.append((m, s, eng.zcl(s), exhaustive_zcl(m, s)))
    return out
