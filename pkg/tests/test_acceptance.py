"""Acceptance criteria, one test each, with their runtime budgets.

Every test prints a single ``[PASS]``/``[FAIL]`` line (shown even under
captured output). Run as a script for the same lines without pytest.
"""

from __future__ import annotations

import json
import random
import sys
import time
from pathlib import Path

import pytest

from rptc.bounds import conjecture_reports
from rptc.fib import check_pattern
from rptc.rfun import r_defined, r_of
from rptc.verify import verify_certificates, verify_closed_forms, verify_knapsack, verify_oracle, verify_theorems
from rptc.zcl import gap_table

GOLDEN = Path(__file__).parent / "golden" / "conjectures_a2_5.json"


def _report(tag: str, ok: bool, elapsed: float, budget: float | None, detail: str, capsys=None) -> None:
    within = budget is None or elapsed < budget
    lim = f" < {budget:g} s" if budget is not None else ""
    line = f"[{'PASS' if ok and within else 'FAIL'}] {tag}: {detail} ({elapsed:.2f} s{lim})"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line
    assert within, line


def _timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


@pytest.fixture(scope="module")
def theorem_rows():
    return _timed(lambda: verify_theorems(512))


def test_c01_r_values(capsys):
    def run():
        bad = [a for a in range(1, 21) if r_of(2**a) != 3]
        bad += ["m=6"] if r_of(6) != 7 else []
        bad += [a for a in range(2, 19) if r_of(2**a + 2 ** (a + 1)) != 5]
        return bad
    bad, dt = _timed(run)
    _report("C1 r(2^a)=3, r(6)=7, r(3*2^a)=5", not bad, dt, 1, f"mismatches {bad}", capsys)


def test_c02_closed_forms(capsys):
    rows, dt = _timed(lambda: verify_closed_forms(2**16))
    bad = [r.m for r in rows if not r.match]
    _report("C2 closed forms vs schedule, even m <= 2^16", not bad and len(rows) > 0, dt, 60,
            f"{len(rows)} classified m, {len(bad)} mismatches", capsys)


def test_c03_stable_gap(theorem_rows, capsys):
    rows, dt = theorem_rows
    bad = [r.m for r in rows if min(r.gaps) != r.G_limit or r.gaps[r.s_of_m - 2] != r.G_limit]
    _report("C3 G_s(m) reaches 2^e(m)-1 and never dips below, m <= 512", not bad and len(rows) == 512, dt, 600,
            f"{len(rows)} m checked, {len(bad)} failures", capsys)


def test_c04_s_le_r(theorem_rows, capsys):
    rows, dt = theorem_rows
    with_r = [r for r in rows if r.r_of_m is not None]
    bad = [r.m for r in with_r if r.s_of_m > r.r_of_m]
    unequal = [(r.m, r.s_of_m, r.r_of_m) for r in with_r if r.s_of_m != r.r_of_m]
    _report("C4 s(m) <= r(m), m <= 512", not bad, dt, None, f"{len(with_r)} m checked, {len(bad)} failures", capsys)
    # report only: equality is conjectural
    msg = (f"  s(m) = r(m) report: equal for {len(with_r) - len(unequal)} of {len(with_r)}; "
           f"strictly smaller at {len(unequal)} m, first {unequal[:6]}")
    if capsys is not None:
        with capsys.disabled():
            print(msg)
    else:
        print(msg)


def test_c05_oracle(capsys):
    rep, dt = _timed(lambda: verify_oracle(4, 3, 12, 5, samples=10_000, seed=2024))
    _report("C5 product_nonzero vs literal expansion", rep.ok, dt, 300,
            f"{rep.checked} vectors, {len(rep.mismatches)} mismatches", capsys)


def test_c06_knapsack(capsys):
    rows, dt = _timed(lambda: verify_knapsack(8, 4))
    bad = [(m, s) for m, s, a, b in rows if a != b]
    _report("C6 knapsack zcl vs exhaustive, m <= 8, s <= 4", not bad and len(rows) == 24, dt, 300,
            f"{len(rows)} pairs, {len(bad)} mismatches", capsys)


def test_c07_certificates(capsys):
    n, dt = _timed(lambda: verify_certificates(4096))
    expected = sum(r_defined(m) for m in range(1, 4097))
    _report("C7 r-schedule certificates, m <= 4096", n == expected, dt, 30, f"{n} of {expected} valid", capsys)


def test_c08_gap_table_m6(capsys):
    rows, dt = _timed(lambda: gap_table(6, 7))
    gaps = tuple(r.gap for r in rows)
    ok = all(g <= b for g, b in zip(gaps, (5, 4, 3, 2, 1, 0))) and len(gaps) == 6 and gaps[0] == 5
    _report("C8 G_s(6) <= 7 - s, G_2(6) = 5", ok, dt, None, f"gaps {gaps}", capsys)


def test_c09_fibonacci(capsys):
    rep, dt = _timed(lambda: check_pattern(20))
    _report("C9 parity pattern, l = 2..20", rep.ok and rep.checked == tuple(range(2, 21)), dt, 10,
            f"first failure {rep.first_failure}", capsys)


def test_c10_monotone(capsys):
    def run():
        ms = random.Random(1729).sample(range(1, 1025), 500)
        bad = []
        for m in ms:
            top = r_of(m) + 1 if r_defined(m) else 3
            gaps = [r.gap for r in gap_table(m, top)]
            if any(a < b for a, b in zip(gaps, gaps[1:])):
                bad.append(m)
        return bad
    bad, dt = _timed(run)
    _report("C10 G_s(m) non-increasing, 500 random m <= 1024", not bad, dt, None, f"{len(bad)} violations", capsys)


def test_c11_conjecture_report(capsys):
    got, dt = _timed(lambda: [r.to_dict() for r in conjecture_reports(range(2, 6))])
    want = json.loads(GOLDEN.read_text())
    notes = {r["a"]: " ".join(r["notes"]) for r in got}
    ok = (got == want and all(r["status"] in ("within", "compatible") for r in got)
          and "TC_2(RP^24) = 39" in notes[3] and "strictly" in notes[4])
    _report("C11 conjecture consistency, a = 2..5", ok, dt, None,
            ", ".join(f"a={r['a']} {r['status']}" for r in got), capsys)


if __name__ == "__main__":
    import inspect

    thm = _timed(lambda: verify_theorems(512))
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            kwargs = {"capsys": None}
            if "theorem_rows" in inspect.signature(fn).parameters:
                kwargs["theorem_rows"] = thm
            try:
                fn(**kwargs)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
