import pytest

from rptc.binexp import binom_parity, rl, to_cbe
from rptc.closedform import (
    Case, _two_block_c_ells, check_against_schedule, classify, closed_r, shifted_family_check, spaced_ell_indices,
)
from rptc.errors import NotApplicable
from rptc.rfun import r_defined, r_of, r_schedule


@pytest.mark.parametrize("m, case", [(12, Case.SPACED_WEAK), (6, Case.SINGLE_BLOCK), (152, Case.SPACED), (2, Case.SPACED_WEAK)])
def test_classify_examples(m, case):
    assert classify(m).case is case


@pytest.mark.parametrize("m", [0, 1, 7, 153])
def test_classify_rejects(m):
    with pytest.raises(ValueError):
        classify(m)


def test_prediction_m6_merges_equal_d():
    p = closed_r(6)
    assert p.r_predicted == 7
    assert [rv for _, rv in p.listed] == [5, 1]
    assert p.nonzero_entries == [(1, 6)]


def test_prediction_m12():
    p = closed_r(12)
    assert p.r_predicted == 5
    assert p.nonzero_entries == [(0b11, 4)]


def test_prediction_m152():
    p = closed_r(152)
    assert p.r_predicted == 5
    assert [rv for _, rv in p.listed] == [1, 1, 1, 1]
    assert [rl(lit) for lit, _ in p.listed] == [103, 39, 7, 3]
    assert spaced_ell_indices(152) == [(0, 64), (96, 100)]
    assert [x.ell for x in r_schedule(152).nonzero] == [0, 64, 96, 100]


def test_no_closed_form_raises():
    m = next(m for m in range(2, 1000, 2) if classify(m).case is Case.NONE)
    with pytest.raises(NotApplicable):
        closed_r(m)


def test_closed_forms_match_schedule():
    n = 0
    for m in range(2, 1 << 13, 2):
        if classify(m).case is Case.NONE:
            continue
        ok, pred, actual = check_against_schedule(m)
        assert ok, (m, pred, actual)
        assert sum(d * r for d, r in pred.nonzero_entries) == m
        assert 1 + sum(r for _, r in pred.nonzero_entries) == pred.r_predicted
        n += 1
    assert n > 400


def test_every_case_is_exercised():
    seen = {classify(m).case for m in range(2, 1 << 12, 2)}
    assert seen >= set(Case) - {Case.SHIFTED_SPACED}


def test_two_block_c_branches_agree_on_boundary():
    hits = 0
    for n1 in range(2, 9):
        for z2 in range(1, n1):
            n2 = n1 - z2
            ge = [rl(x) for x in _two_block_c_ells(n1, n2, z2, "ge")]
            le = [rl(x) for x in _two_block_c_ells(n1, n2, z2, "le")]
            assert ge == le
            hits += 1
    assert hits


def test_shifted_family_never_contradicts_schedule():
    predictions = 0
    for m in range(2, 1 << 14, 2):
        if classify(m).case not in (Case.SPACED, Case.SPACED_WEAK):
            continue
        z_w = to_cbe(m).zeros[-1]
        for i in range(2**z_w):
            chk = shifted_family_check(m, i)
            if chk.prediction is not None and r_defined(m + i):
                assert r_of(m + i) == chk.prediction, (m, i)
                predictions += 1
            if chk.simple_parity is not None:
                assert chk.simple_parity == chk.parity
    assert predictions > 1000


def test_shifted_family_i0_is_spaced_case():
    for m in range(2, 1 << 10, 2):
        if classify(m).case in (Case.SPACED, Case.SPACED_WEAK):
            chk = shifted_family_check(m, 0)
            assert chk.parity == 1 and chk.prediction == r_of(m)


def test_shifted_family_preconditions():
    with pytest.raises(ValueError):
        shifted_family_check(6, 0)
    with pytest.raises(ValueError):
        shifted_family_check(152, 8)
    assert binom_parity(152 + 3, 152) == 1
