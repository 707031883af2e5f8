"""Closed-form descriptions of r(m) and its non-zero schedule entries for even m.

Every ``d`` value is produced as a run-length literal (a list of
``(digit, count)`` pairs), so each formula below can be read against its
binary-expansion statement block by block. Cases, tried in this order:

``SPACED`` / ``SPACED_WEAK``
    ``n1 < n2 < ... < n_w`` and ``n_u <= z_u`` for all u (strict ``<``
    everywhere for ``SPACED``). ``r = 1 + 2^{n_w}``.
``SINGLE_BLOCK``
    ``cbe = (n, z)``, ``n > z``. ``r = 1 + sum_{i<=sigma} 2^{n - i z}`` where
    ``sigma`` is the largest integer strictly below ``n / z``.
``TWO_BLOCK_A``
    ``n1 <= z1`` and ``max(n1, z2) < n2``.
``TWO_BLOCK_B``
    ``n2 <= n1 <= min(z1, z2)``. ``r = 1 + 2^{n1}``.
``TWO_BLOCK_C``
    ``n2 <= z2 < n1 <= z1``. ``r = 1 + 2^{n1} + 2^{min(n2, n1 - z2)}``.
``TWO_BLOCK_D``
    ``z1 < n1 < n2 <= z2``. ``r = 1 + 2^{n2}``.

When two listed entries share the same ``d`` they are one schedule entry and
their ``r`` values add (e.g. ``n_u = z_u`` in the spaced case).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .binexp import Cbe, binom_parity, rl, to_cbe
from .errors import NotApplicable
from .rfun import r_schedule

__all__ = [
    "Case",
    "ClosedFormCase",
    "Prediction",
    "classify",
    "closed_r",
    "spaced_ell_indices",
    "shifted_family_check",
    "ShiftedCheck",
    "Literal",
    "check_against_schedule",
]

Literal = list  # list[tuple[int, int]]


class Case(str, enum.Enum):
    SPACED = "Spaced"
    SPACED_WEAK = "SpacedWeak"
    SHIFTED_SPACED = "ShiftedSpaced"
    SINGLE_BLOCK = "SingleBlock"
    TWO_BLOCK_A = "TwoBlockA"
    TWO_BLOCK_B = "TwoBlockB"
    TWO_BLOCK_C = "TwoBlockC"
    TWO_BLOCK_D = "TwoBlockD"
    NONE = "None"


@dataclass(frozen=True)
class ClosedFormCase:
    m: int
    case: Case
    cbe: Cbe
    params: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class Prediction:
    m: int
    case: Case
    r_predicted: int
    # (d literal, r_l) in listing order, before merging equal d's
    listed: tuple[tuple[tuple[tuple[int, int], ...], int], ...]

    @property
    def nonzero_entries(self) -> list[tuple[int, int]]:
        """Merged ``(d, r_l)`` pairs sorted by decreasing ``d`` (increasing l)."""
        merged: dict[int, int] = {}
        for lit, r in self.listed:
            d = rl(lit)
            merged[d] = merged.get(d, 0) + r
        return sorted(((d, r) for d, r in merged.items() if r), reverse=True)


def classify(m: int) -> ClosedFormCase:
    if m < 2 or m % 2:
        raise ValueError(f"closed forms cover even m >= 2 only, got {m}")
    c = to_cbe(m)
    n, z = c.ones, c.zeros
    w = c.omega
    if all(n[u] < n[u + 1] for u in range(w - 1)) and all(n[u] <= z[u] for u in range(w)):
        strict = all(n[u] < z[u] for u in range(w))
        return ClosedFormCase(m, Case.SPACED if strict else Case.SPACED_WEAK, c)
    if w == 1:
        # n > z here, since n <= z was caught above
        (n1,), (z1,) = n, z
        return ClosedFormCase(m, Case.SINGLE_BLOCK, c, {"sigma": (n1 - 1) // z1})
    if w == 2:
        n1, n2 = n
        z1, z2 = z
        if n1 <= z1 and max(n1, z2) < n2:
            return ClosedFormCase(m, Case.TWO_BLOCK_A, c, {"sigma": (n2 - 1) // z2})
        if n2 <= n1 <= min(z1, z2):
            return ClosedFormCase(m, Case.TWO_BLOCK_B, c)
        if n2 <= z2 < n1 <= z1:
            return ClosedFormCase(m, Case.TWO_BLOCK_C, c)
        if z1 < n1 < n2 <= z2:
            q, rho = divmod(n1 - z1 - 1, z1)
            return ClosedFormCase(m, Case.TWO_BLOCK_D, c, {"q": q, "rho": rho})
    return ClosedFormCase(m, Case.NONE, c)


def _tail(c: Cbe, u: int) -> Literal:
    """``0^{n_{u+1}} 1^{z_{u+1}} ... 0^{n_w} 1^{z_w}`` (1-based u)."""
    n, z = c.ones, c.zeros
    out = []
    for i in range(u, c.omega):
        out += [(0, n[i]), (1, z[i])]
    return out


def _spaced(c: Cbe) -> tuple[int, list]:
    n, z = c.ones, c.zeros
    listed = []
    for u in range(1, c.omega + 1):
        nu_, zu = n[u - 1], z[u - 1]
        prev = 2 ** n[u - 2] if u >= 2 else 0
        listed.append(([(1, zu)] + _tail(c, u), 2**nu_ - prev - 1))
        listed.append(([(1, nu_)] + _tail(c, u), 1))
    return 1 + 2 ** n[-1], listed


def _single_block(c: Cbe, sigma: int) -> tuple[int, list]:
    (n,), (z,) = c.ones, c.zeros
    total = sum(2 ** (n - i * z) for i in range(sigma + 1))
    return 1 + total, [([(1, z)], total - 1), ([(1, n - sigma * z)], 1)]


def _two_block_a(c: Cbe, sigma: int) -> tuple[int, list]:
    (n1, n2), (z1, z2) = c.ones, c.zeros
    total = sum(2 ** (n2 - i * z2) for i in range(sigma + 1))
    return 1 + total, [
        ([(1, z1), (0, n2), (1, z2)], 2**n1 - 1),
        ([(1, n1), (0, n2), (1, z2)], 1),
        ([(1, z2)], total - 2**n1 - 1),
        ([(1, n2 - sigma * z2)], 1),
    ]


def _two_block_b(c: Cbe) -> tuple[int, list]:
    (n1, n2), (z1, z2) = c.ones, c.zeros
    return 1 + 2**n1, [
        ([(1, z1), (0, n2), (1, z2)], 2**n1 - 1),
        ([(1, n2), (0, z2), (1, n1)], 1),
    ]


def _two_block_c_ells(n1: int, n2: int, z2: int, branch: str) -> tuple[Literal, Literal]:
    if branch == "ge":  # n2 >= n1 - z2
        return [(1, n2), (0, n1), (1, z2)], [(1, n1 - z2)]
    return [(1, n2), (0, z2), (1, n1 - n2 - z2), (0, n2), (1, z2)], [(1, n2)]


def _two_block_c(c: Cbe) -> tuple[int, list]:
    (n1, n2), (z1, z2) = c.ones, c.zeros
    low = min(n2, n1 - z2)
    d_l1, d_l2 = _two_block_c_ells(n1, n2, z2, "ge" if n2 >= n1 - z2 else "le")
    return 1 + 2**n1 + 2**low, [
        ([(1, z1), (0, n2), (1, z2)], 2**n1 - 1),
        (d_l1, 1),
        ([(1, z2)], 2**low - 1),
        (d_l2, 1),
    ]


def _two_block_d(c: Cbe, q: int, rho: int) -> tuple[int, list]:
    (n1, n2), (z1, z2) = c.ones, c.zeros
    r_k2 = (
        2 ** (n1 + 1) * (2 ** (n2 - n1 - 1) - 1)
        + 2**rho * (2 ** (z1 - 1) - 1) * sum(2 ** (i * z1 + 2) for i in range(q + 1))
        + 2 ** (rho + 1)
        - 1
    )
    return 1 + 2**n2, [
        ([(1, z1), (0, n2), (1, z2)], 2**n2 - r_k2 - 2),
        ([(1, rho + 1), (0, n2), (1, z2)], 1),
        ([(1, z2)], r_k2),
        ([(1, n2)], 1),
    ]


def closed_r(m: int) -> Prediction:
    cf = classify(m)
    c = cf.cbe
    if cf.case in (Case.SPACED, Case.SPACED_WEAK):
        r, listed = _spaced(c)
    elif cf.case is Case.SINGLE_BLOCK:
        r, listed = _single_block(c, cf.params["sigma"])
    elif cf.case is Case.TWO_BLOCK_A:
        r, listed = _two_block_a(c, cf.params["sigma"])
    elif cf.case is Case.TWO_BLOCK_B:
        r, listed = _two_block_b(c)
    elif cf.case is Case.TWO_BLOCK_C:
        r, listed = _two_block_c(c)
    elif cf.case is Case.TWO_BLOCK_D:
        r, listed = _two_block_d(c, cf.params["q"], cf.params["rho"])
    else:
        raise NotApplicable(f"no closed form for m={m} (cbe {c.blocks})")
    frozen = tuple((tuple(lit), rv) for lit, rv in listed)
    return Prediction(m, cf.case, r, frozen)


def spaced_ell_indices(m: int) -> list[tuple[int, int]]:
    """The indices ``(kappa_u, ell_u)`` of the spaced case, as literals evaluated.

    ``kappa_u = 1^{z1} 0^{n2} 1^{z2} ... 0^{n_{u-1}} 1^{z_{u-1}} 0^{n_u + z_u + ... + z_w}``
    ``ell_u   = 1^{z1} ... 1^{z_{u-1}} 0^{n_u} 1^{z_u - n_u} 0^{n_u + n_{u+1} + ... + z_w}``
    The initial segment is empty for u = 1, so ``kappa_1 = 0``.
    """
    cf = classify(m)
    if cf.case not in (Case.SPACED, Case.SPACED_WEAK):
        raise NotApplicable(f"m={m} is not spaced")
    n, z = cf.cbe.ones, cf.cbe.zeros
    w = cf.cbe.omega
    out = []
    for u in range(1, w + 1):
        head = [(1, z[0])] if u >= 2 else []
        for i in range(1, u - 1):
            head += [(0, n[i]), (1, z[i])]
        rest = sum(n[i] + z[i] for i in range(u, w))
        kappa = rl(head + [(0, n[u - 1] + z[u - 1] + rest)], leading_zeros=True)
        ell = rl(head + [(0, n[u - 1]), (1, z[u - 1] - n[u - 1]), (0, n[u - 1] + rest)], leading_zeros=True)
        out.append((kappa, ell))
    return out


@dataclass(frozen=True)
class ShiftedCheck:
    m: int
    i: int
    j: int
    parity: int
    simple_parity: Optional[int]  # C(j, i) mod 2, only when j < 2^{z_w}
    prediction: Optional[int]  # 1 + 2^{n_w} when parity is odd


def shifted_family_check(m: int, i: int) -> ShiftedCheck:
    """Odd ``C(m + j, m + i)`` with ``j = (i + 1)(2^{n_w} + 1) - 2`` predicts ``r(m + i) = 1 + 2^{n_w}``."""
    cf = classify(m)
    if cf.case not in (Case.SPACED, Case.SPACED_WEAK):
        raise ValueError(f"m={m} is not spaced (case {cf.case.value})")
    n_w, z_w = cf.cbe.ones[-1], cf.cbe.zeros[-1]
    if not 0 <= i < 2**z_w:
        raise ValueError(f"i must lie in [0, 2^{z_w}), got {i}")
    j = (i + 1) * (2**n_w + 1) - 2
    parity = binom_parity(m + j, m + i)
    simple = binom_parity(j, i) if j < 2**z_w else None
    return ShiftedCheck(m, i, j, parity, simple, 1 + 2**n_w if parity else None)


def check_against_schedule(m: int) -> tuple[bool, Prediction, list[tuple[int, int]]]:
    pred = closed_r(m)
    actual = r_schedule(m)
    ok = pred.r_predicted == actual.r and pred.nonzero_entries == actual.as_pairs()
    return ok, pred, actual.as_pairs()
