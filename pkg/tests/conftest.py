import math


def literal_r(m: int) -> int:
    """r(m) straight from its recursive definition, binomials via math.comb."""
    e = ((m + 1) & -(m + 1)).bit_length() - 1
    k = m.bit_length()
    d0 = 2**k - m - 1
    t = (d0 - 2**e) // 2**e
    rest = m - (2**e - 1)
    total = 0
    for ell in range(t + 1):
        d = d0 - 2**e * ell
        if math.comb(m + d, d) % 2:
            r = rest // d
            rest -= d * r
            total += r
    assert rest == 0
    return 1 + total
