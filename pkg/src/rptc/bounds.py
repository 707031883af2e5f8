"""Bounds on TC_s(RP^m) and on the defect delta_s(m) = s*m - TC_s(RP^m).

    max(zcl_s, m(s-1)) <= TC_s(RP^m) <= s*m

with the exact value m(s-1) for the Hopf spaces RP^1, RP^3, RP^7. Known delta_2
values from the immersion literature are kept in ``data/fixtures.json`` and are
checked against ``delta_2(m) <= G_2(m)`` when loaded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Optional

from .errors import ConsistencyError
from .rfun import r_defined, r_of
from .zcl import GapEngine, stabilization

__all__ = [
    "HOPF",
    "TcBounds",
    "Fixture",
    "ChainReport",
    "ConjectureRecord",
    "tc_bounds",
    "ell_of",
    "load_fixtures",
    "fixtures",
    "chain_report",
    "conjecture_reports",
]

HOPF = (1, 3, 7)


@dataclass(frozen=True)
class TcBounds:
    m: int
    s: int
    lower: int
    upper: int
    exact: bool
    provenance: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if self.lower > self.upper or (self.exact and self.lower != self.upper):
            raise ConsistencyError(f"bad TC interval {self}")

    @property
    def delta_interval(self) -> tuple[int, int]:
        sm = self.s * self.m
        return sm - self.upper, sm - self.lower


@dataclass(frozen=True)
class Fixture:
    m: int
    delta2_min: int
    delta2_max: int
    note: str = ""

    @property
    def values(self) -> range:
        return range(self.delta2_min, self.delta2_max + 1)


def tc_bounds(m: int, s: int) -> TcBounds:
    if m < 1 or s < 2:
        raise ValueError(f"tc_bounds needs m >= 1 and s >= 2, got m={m}, s={s}")
    zcl = GapEngine(m).zcl(s)
    cat = m * (s - 1)
    dim = s * m
    prov = [("zcl", zcl), ("cat", cat), ("dimension", dim)]
    if m in HOPF:
        if zcl > cat:
            raise ConsistencyError(f"zcl_{s}(RP^{m}) = {zcl} exceeds the Hopf value {cat}")
        prov.append(("hopf", cat))
        return TcBounds(m, s, cat, cat, True, tuple(prov))
    lower = max(zcl, cat)
    return TcBounds(m, s, lower, dim, lower == dim, tuple(prov))


def ell_of(m: int) -> Optional[int]:
    """m + 1 for even m, (m + 1) / 2 for m = 1 mod 4, undefined (None) for m = 3 mod 4."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if m % 2 == 0:
        return m + 1
    if m % 4 == 1:
        return (m + 1) // 2
    return None


def load_fixtures(path=None) -> dict[int, Fixture]:
    if path is None:
        text = resources.files("rptc").joinpath("data/fixtures.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    out = {}
    for rec in json.loads(text):
        fx = Fixture(int(rec["m"]), int(rec["delta2_min"]), int(rec["delta2_max"]), rec.get("note", ""))
        g2 = 2 * fx.m - GapEngine(fx.m).zcl(2)
        if not 0 <= fx.delta2_min <= fx.delta2_max <= g2:
            raise ConsistencyError(f"fixture for m={fx.m} outside 0 <= delta_2 <= G_2 = {g2}")
        out[fx.m] = fx
    return out


@lru_cache(maxsize=1)
def fixtures() -> dict[int, Fixture]:
    return load_fixtures()


@dataclass(frozen=True)
class ChainReport:
    m: int
    s_of_m: int
    r_of_m: Optional[int]
    ell_of_m: Optional[int]
    lambda_note: str = "lambda(m) <= s(m) (lambda itself needs unknown TC values)"

    @property
    def s_equals_r(self) -> Optional[bool]:
        return None if self.r_of_m is None else self.s_of_m == self.r_of_m


def chain_report(m: int) -> ChainReport:
    st = stabilization(m)
    return ChainReport(m, st.s_of_m, st.r_of_m, ell_of(m))


@dataclass(frozen=True)
class ConjectureRecord:
    a: int
    m: int
    r: int
    # conjectured delta_j(m) <= (r - j) a, for j = 2..r
    conjectured: dict[int, int]
    # computed G_j(m), the unconditional upper bound for delta_j(m)
    gaps: dict[int, int]
    imm_lower: Optional[int]
    fixture: Optional[tuple[int, int]]
    status: str
    implied_delta2: Optional[tuple[int, int]]
    implied_tc2: Optional[tuple[int, int]]
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "m": self.m,
            "r": self.r,
            "conjectured_delta_bound": {str(j): v for j, v in self.conjectured.items()},
            "G": {str(j): v for j, v in self.gaps.items()},
            "imm_lower": self.imm_lower,
            "fixture_delta2": list(self.fixture) if self.fixture else None,
            "status": self.status,
            "implied_delta2": list(self.implied_delta2) if self.implied_delta2 else None,
            "implied_tc2": list(self.implied_tc2) if self.implied_tc2 else None,
            "notes": list(self.notes),
        }


def conjecture_reports(a_range: Iterable[int], fixture_table: Optional[dict[int, Fixture]] = None) -> list[ConjectureRecord]:
    """Compares fixtures with the conjectured bounds delta_j(3*2^a) <= (r - j) a.

    Status is "within" when every admissible fixture value obeys the bound,
    "compatible" when only some do (the conjecture would then pin delta_2
    down), "contradicted" when none do, and "no-fixture" otherwise. Nothing
    here treats the conjecture as true.
    """
    table = fixtures() if fixture_table is None else fixture_table
    out = []
    for a in a_range:
        if a < 1:
            raise ValueError(f"a must be >= 1, got {a}")
        m = 3 * 2**a
        r = r_of(m)
        eng = GapEngine(m)
        conj = {j: (r - j) * a for j in range(2, r + 1)}
        gaps = {j: j * m - eng.zcl(j) for j in range(2, r + 1)}
        imm_lower = 2 ** (a + 1) + 2 ** (a + 2) - 3 * a if a >= 2 else None
        fx = table.get(m)
        notes = []
        implied_d = implied_tc = None
        if fx is None:
            status = "no-fixture"
        else:
            lo, hi = fx.delta2_min, min(fx.delta2_max, conj[2])
            if fx.delta2_max <= conj[2]:
                status = "within"
            elif fx.delta2_min <= conj[2]:
                status = "compatible"
            else:
                status = "contradicted"
            if lo <= hi:
                implied_d = (lo, hi)
                implied_tc = (2 * m - hi, 2 * m - lo)
            if status == "within" and fx.delta2_max == conj[2] and fx.delta2_min == fx.delta2_max:
                notes.append(f"bound is attained: delta_2({m}) = {conj[2]}")
            if status == "compatible" and lo == hi:
                notes.append(f"conjecture would settle TC_2(RP^{m}) = {2 * m - lo}")
            elif status == "compatible":
                notes.append(f"conjecture would give TC_2(RP^{m}) >= {2 * m - hi}")
        if m == 48:
            notes.append("non-immersion RP^48 in R^84 gives delta_2(48) < 12 strictly, so equality is not expected")
        out.append(ConjectureRecord(a, m, r, conj, gaps, imm_lower, (fx.delta2_min, fx.delta2_max) if fx else None,
                                    status, implied_d, implied_tc, tuple(notes)))
    return out
