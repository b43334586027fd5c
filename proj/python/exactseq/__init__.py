"""Exact integer sequence kernels: registry lookups, linear recurrence
classification, and partition-counting quasipolynomials."""

from ._core import (
    BudgetError,
    ClassError,
    ConsistencyError,
    catalan_parity_aware,
    lrs_classify,
    lrs_term,
    lrs_terms,
    part_count,
    part_count_class,
    q_pm,
    seq,
    seq_range,
    sequence_names,
    verify,
    verify_suites,
    weighted_parts_class,
)

__all__ = [
    "BudgetError",
    "ClassError",
    "ConsistencyError",
    "catalan_parity_aware",
    "lrs_classify",
    "lrs_term",
    "lrs_terms",
    "part_count",
    "part_count_class",
    "q_pm",
    "seq",
    "seq_range",
    "sequence_names",
    "verify",
    "verify_suites",
    "weighted_parts_class",
]
