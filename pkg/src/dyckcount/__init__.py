"""Exact counting of generalized Dyck paths.

``C(m, n)`` counts lattice paths from (0, 0) to (m, n) that stay weakly
below the line ``y = (n/m) x``. The package computes it through several
closed forms and recurrences and checks each against brute-force oracles.
"""
from .arith import a_value, binomial
from .counting import (
    CountResult,
    Method,
    catalan_sequence,
    count,
    count_coprime,
    count_duchon,
    count_fuss,
    count_main,
    count_recurrence,
)
from .exceptions import CrossCheckError, DyckError, EnumerationLimitError, PreconditionError
from .partitions import MultSeq
from .paths import PathWord, census, count_dp, primitive_counts

__version__ = "0.1.0"

__all__ = [
    "a_value",
    "binomial",
    "CountResult",
    "Method",
    "catalan_sequence",
    "count",
    "count_coprime",
    "count_duchon",
    "count_fuss",
    "count_main",
    "count_recurrence",
    "CrossCheckError",
    "DyckError",
    "EnumerationLimitError",
    "PreconditionError",
    "MultSeq",
    "PathWord",
    "census",
    "count_dp",
    "primitive_counts",
]
