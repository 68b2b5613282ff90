"""Group-invariant Butson Hadamard matrices: exact classification, construction and census."""

import json

from ._butson import (
    ConflictError,
    InvariantBH,
    PerfectArray,
    Verdict,
    all_verdicts,
    classify,
    cyclic_bh,
    cyclotomic_polynomial,
    factorize,
    field_descent_F,
    is_self_conjugate,
    is_self_conjugate_composite,
    is_zero,
    kronecker,
    m_tilde,
    nu,
    ord,
    perfect_array,
    prime_power_bh,
    semigroup_member,
    squarefree_part,
    zadoff_chu,
)
from ._butson import census as _census


def census(n_min=1, n_max=100, h_min=1, h_max=100, attribution="staged", jobs=1, propagate_divisors=False):
    """Run a census; returns (summary dict, csv text)."""
    summary, csv = _census(n_min, n_max, h_min, h_max, attribution, jobs, propagate_divisors)
    return json.loads(summary), csv
