"""Exact combinatorics for the higher topological complexity of real projective spaces."""

__version__ = "0.1.0"

from .binexp import Cbe, alpha, binom_parity, e_of, from_cbe, max_submask_leq, mu, nu, rl, to_cbe
from .errors import CertificateInvalid, ConsistencyError, NotApplicable, PowerOfTwoSuccessor, TheoremViolation
from .rfun import RSchedule, r_of, r_schedule
from .zcl import (
    Certificate,
    FactorVector,
    GapRow,
    StabilizationReport,
    brute_product_nonzero,
    formulota_certificate,
    gap_table,
    min_cost,
    product_nonzero,
    stabilization,
    zcl_s,
)
