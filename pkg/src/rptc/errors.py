class PowerOfTwoSuccessor(ValueError):
    """r(m) is undefined when m + 1 is a power of two."""

    def __init__(self, m: int):
        self.m = m
        super().__init__(
            f"r({m}) is undefined: m + 1 = {m + 1} is a power of two "
            f"(for such m the gap is 2^e - 1 = {m} already at s = 2)"
        )


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug, never bad input."""


class TheoremViolation(ConsistencyError):
    """A computed value contradicts a proved statement about zcl_s(RP^m)."""


class CertificateInvalid(ConsistencyError):
    pass


class NotApplicable(ValueError):
    """No closed form covers this m."""
