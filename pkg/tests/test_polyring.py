import math
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from rptc.polyring import TruncatedRing


def dict_product(m, s, exps):
    """Reference expansion with dict-of-monomials over Z/2."""
    poly = Counter({(0,) * s: 1})
    for j, e in enumerate(exps, start=1):
        for _ in range(e):
            nxt = Counter()
            for mono, c in poly.items():
                for var in (0, j):
                    if mono[var] < m:
                        new = list(mono)
                        new[var] += 1
                        nxt[tuple(new)] ^= c
            poly = Counter({k: v for k, v in nxt.items() if v})
    return {k for k, v in poly.items() if v}


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(2, 3), st.data())
def test_bitset_matches_dict_expansion(m, s, data):
    exps = data.draw(st.lists(st.integers(0, 2 * m), min_size=s - 1, max_size=s - 1))
    ring = TruncatedRing(m, s)
    poly = ring.one()
    for j, e in enumerate(exps, start=1):
        for _ in range(e):
            poly = ring.mul_sum(poly, 0, j)
    assert set(ring.terms(poly)) == dict_product(m, s, exps)


def test_binomial_coefficients_in_two_variables():
    m = 7
    ring = TruncatedRing(m, 2)
    poly = ring.one()
    for e in range(1, 2 * m + 1):
        poly = ring.mul_sum(poly, 0, 1)
        for a in range(m + 1):
            b = e - a
            want = math.comb(e, a) % 2 if 0 <= b <= m else 0
            assert ring.coefficient(poly, (a, b)) == want


def test_truncation_kills_high_powers():
    ring = TruncatedRing(3, 2)
    p = ring.monomial((3, 0))
    assert ring.mul_var(p, 0) == 0
    assert ring.mul_var(p, 1) == ring.monomial((3, 1))


def test_top_class_survives_only_at_top():
    ring = TruncatedRing(2, 3)
    top = ring.monomial((2, 2, 2))
    assert [t for t in ring.terms(top)] == [(2, 2, 2)]
    for v in range(3):
        assert ring.mul_var(top, v) == 0


def test_size_guard():
    with pytest.raises(ValueError):
        TruncatedRing(20, 6)
