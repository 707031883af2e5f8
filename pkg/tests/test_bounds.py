import json

import pytest

from rptc.bounds import chain_report, conjecture_reports, ell_of, fixtures, load_fixtures, tc_bounds
from rptc.errors import ConsistencyError
from rptc.zcl import GapEngine


@pytest.mark.parametrize("s", [3, 4, 5, 8])
def test_rp2_exact(s):
    b = tc_bounds(2, s)
    assert b.exact and b.lower == b.upper == 2 * s


@pytest.mark.parametrize("m", [1, 3, 7])
def test_hopf_exact(m):
    b = tc_bounds(m, 5)
    assert b.exact and b.lower == 4 * m


def test_m6_interval_and_fixture():
    b = tc_bounds(6, 2)
    assert (b.lower, b.upper, b.exact) == (7, 12, False)
    assert b.delta_interval == (0, 5)
    fx = fixtures()[6]
    assert list(fx.values) == [5]
    assert 12 - fx.delta2_max == 7


def test_bounds_are_ordered():
    for m in range(1, 40):
        for s in range(2, 6):
            b = tc_bounds(m, s)
            assert b.lower <= b.upper
            assert b.exact == (b.lower == b.upper)


def test_fixtures_within_gap():
    for m, fx in fixtures().items():
        assert fx.delta2_max <= 2 * m - GapEngine(m).zcl(2)


def test_bad_fixture_rejected(tmp_path):
    p = tmp_path / "fx.json"
    p.write_text(json.dumps([{"m": 6, "delta2_min": 5, "delta2_max": 6}]))
    with pytest.raises(ConsistencyError):
        load_fixtures(p)


def test_ell_of():
    assert ell_of(6) == 7 and ell_of(5) == 3 and ell_of(7) is None


def test_chain_report():
    rep = chain_report(12)
    assert (rep.s_of_m, rep.r_of_m, rep.ell_of_m) == (5, 5, 13)


def test_conjecture_reports_a2_to_a5():
    recs = {r.a: r for r in conjecture_reports(range(2, 6))}
    assert [recs[a].imm_lower for a in range(2, 6)] == [18, 39, 84, 177]
    assert recs[2].status == "within"
    assert recs[3].status == "compatible"
    assert any("TC_2(RP^24) = 39" in n for n in recs[3].notes)
    assert any("strictly" in n for n in recs[4].notes)
    assert all(r.conjectured[2] == (r.r - 2) * r.a for r in recs.values())


def test_conjecture_reports_without_fixture():
    (rec,) = conjecture_reports([6], fixture_table={})
    assert rec.status == "no-fixture" and rec.fixture is None
