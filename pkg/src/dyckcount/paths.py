"""Lattice paths as words over {x, y}, rotation classes, and counting oracles.

The per-word operations here work directly on strings and follow the
definitions literally; the bulk operations (:func:`enumerate_paths`,
:func:`dyck_masks`, :func:`census`) run on packed masks through
:mod:`dyckcount.kernels`. Tests hold the two against each other.
"""
from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import kernels
from .exceptions import CrossCheckError, EnumerationLimitError, PreconditionError
from .partitions import MultSeq, sequences_with_norm

__all__ = [
    "PathWord",
    "Shape",
    "CensusRecord",
    "DEFAULT_ENUM_LIMIT",
    "enum_limit",
    "height",
    "is_dyck",
    "rotate",
    "period",
    "rotation_class",
    "canonical_dyck",
    "shape",
    "type_of",
    "enumerate_paths",
    "dyck_masks",
    "count_dp",
    "primitive_counts",
    "census",
    "census_by_type",
]

DEFAULT_ENUM_LIMIT = 24


def enum_limit() -> int:
    """Exhaustive-enumeration guard on m + n; ``DYCK_ENUM_LIMIT`` overrides."""
    raw = os.environ.get("DYCK_ENUM_LIMIT")
    if raw is None or not raw.strip():
        return DEFAULT_ENUM_LIMIT
    try:
        value = int(raw)
    except ValueError:
        raise PreconditionError(f"DYCK_ENUM_LIMIT must be an integer, got {raw!r}") from None
    return min(value, kernels.MAX_MASK_BITS)


def _guard(m: int, n: int, limit: int | None) -> None:
    if m < 1 or n < 1:
        raise PreconditionError(f"m and n must be positive, got ({m}, {n})")
    limit = enum_limit() if limit is None else limit
    if m + n > limit:
        raise EnumerationLimitError(
            f"m + n = {m + n} exceeds the exhaustive-enumeration limit {limit} "
            "(set DYCK_ENUM_LIMIT to raise it)"
        )


@dataclass(frozen=True)
class PathWord:
    """A lattice path from (0, 0) as a word of x (east) and y (north) steps."""

    steps: str

    def __post_init__(self) -> None:
        s = self.steps.lower()
        if not s or set(s) - {"x", "y"}:
            raise PreconditionError(f"a path word is a non-empty word over x/y, got {self.steps!r}")
        object.__setattr__(self, "steps", s)

    @property
    def m(self) -> int:
        return self.steps.count("x")

    @property
    def n(self) -> int:
        return self.steps.count("y")

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps


@dataclass(frozen=True)
class Shape:
    """Composition of gcd(m, n) given by the gaps between diagonal contacts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(p < 1 for p in self.parts):
            raise PreconditionError(f"shape parts must be positive, got {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class CensusRecord:
    type: MultSeq
    period: int
    count: int


def _word(p: PathWord | str) -> PathWord:
    return p if isinstance(p, PathWord) else PathWord(p)


def height(m: int, n: int, prefix: PathWord | str) -> int:
    """``n * #x - m * #y`` over the prefix; non-negative means on or below the diagonal."""
    s = prefix.steps if isinstance(prefix, PathWord) else prefix.lower()
    return n * s.count("x") - m * s.count("y")


def _prefix_heights(p: PathWord) -> list[int]:
    m, n = p.m, p.n
    out = [0]
    for ch in p.steps:
        out.append(out[-1] + (n if ch == "x" else -m))
    return out


def is_dyck(p: PathWord | str) -> bool:
    p = _word(p)
    return min(_prefix_heights(p)) >= 0


def rotate(p: PathWord | str, s: int) -> PathWord:
    """The cyclic shift ``u_{s+1} ... u_L u_1 ... u_s`` (s taken mod L)."""
    p = _word(p)
    s %= len(p)
    return PathWord(p.steps[s:] + p.steps[:s])


def period(p: PathWord | str) -> int:
    p = _word(p)
    for r in range(1, len(p) + 1):
        if rotate(p, r) == p:
            return r
    raise AssertionError("unreachable: rotating by the full length is the identity")


def rotation_class(p: PathWord | str) -> frozenset[PathWord]:
    p = _word(p)
    return frozenset(rotate(p, s) for s in range(1, len(p) + 1))


def canonical_dyck(p: PathWord | str) -> PathWord:
    """Rotate so the path starts right after its lowest point.

    The cut is the first prefix length attaining the minimum height, which
    makes the result Dyck; for coprime (m, n) it is the only Dyck word in
    the rotation class.
    """
    p = _word(p)
    hs = _prefix_heights(p)
    return rotate(p, hs.index(min(hs)))


def shape(p: PathWord | str) -> Shape:
    p = _word(p)
    if not is_dyck(p):
        raise PreconditionError(f"shape is defined only for Dyck paths, got {p}")
    m, n = p.m, p.n
    block = len(p) // math.gcd(m, n)
    contacts = [i // block for i, ht in enumerate(_prefix_heights(p)) if ht == 0 and i > 0]
    return Shape(tuple(b - a for a, b in zip([0] + contacts, contacts)))


def type_of(p: PathWord | str) -> MultSeq:
    return MultSeq.from_parts(shape(p).parts)


def enumerate_paths(m: int, n: int, limit: int | None = None) -> Iterator[PathWord]:
    """All binom(m+n, n) words with m x's and n y's, in lexicographic order."""
    _guard(m, n, limit)
    L = m + n
    for w in kernels.enumerate_masks(m, n):
        yield PathWord(kernels.mask_to_word(int(w), L))


def dyck_masks(m: int, n: int, limit: int | None = None, backend: str | None = None) -> np.ndarray:
    """Packed masks of every Dyck word to (m, n), lexicographically sorted."""
    _guard(m, n, limit)
    masks = kernels.enumerate_masks(m, n, backend)
    ok, _ = kernels.scan_heights(masks, m, n, backend)
    return masks[ok]


def count_dp(m: int, n: int, strict: bool = False) -> int:
    """Count monotone paths through admissible grid points.

    A point (x, y) is admissible when ``n*x - m*y >= 0``; with ``strict``
    the inequality is strict except at (0, 0) and (m, n).
    """
    if m < 1 or n < 1:
        raise PreconditionError(f"m and n must be positive, got ({m}, {n})")
    row = [0] * (n + 1)
    for x in range(m + 1):
        for y in range(n + 1):
            ht = n * x - m * y
            endpoint = (x, y) in ((0, 0), (m, n))
            if ht < 0 or (strict and ht == 0 and not endpoint):
                row[y] = 0
            elif x == 0 and y == 0:
                row[y] = 1
            else:
                # row[y] still holds column x-1; row[y-1] already holds column x
                row[y] = row[y] + (row[y - 1] if y else 0)
    return row[n]


def primitive_counts(p: int, q: int, dmax: int) -> list[int]:
    """``[D(p,q), D(2p,2q), ..., D(dmax*p, dmax*q)]``, counts of paths touching
    the diagonal only at their endpoints.

    Computed by the strict DP and by first-return decomposition of the
    non-strict counts; raises CrossCheckError if the two disagree.
    """
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise PreconditionError(f"(p, q) must be a coprime positive pair, got ({p}, {q})")
    if dmax < 1:
        raise PreconditionError(f"dmax must be >= 1, got {dmax}")
    strict = [count_dp(d * p, d * q, strict=True) for d in range(1, dmax + 1)]
    full = [1] + [count_dp(d * p, d * q) for d in range(1, dmax + 1)]
    first_return: list[int] = []
    for d in range(1, dmax + 1):
        first_return.append(full[d] - sum(first_return[i - 1] * full[d - i] for i in range(1, d)))
    if strict != first_return:
        raise CrossCheckError(
            f"primitive counts disagree for (p, q) = ({p}, {q}): strict DP {strict}, first-return {first_return}"
        )
    return strict


def _type_key_order(d: int) -> dict[MultSeq, int]:
    return {a: i for i, a in enumerate(sequences_with_norm(d))}


def census(m: int, n: int, limit: int | None = None, backend: str | None = None) -> list[CensusRecord]:
    """Group all Dyck paths to (m, n) by (type, period) and count them.

    Records come in the :func:`sequences_with_norm` order of types, then
    by increasing period; only non-empty groups are listed.
    """
    masks = dyck_masks(m, n, limit, backend)
    L = m + n
    types = kernels.type_matrix(masks, m, n, backend)
    pers = kernels.periods(masks, L, backend)
    keyed = np.concatenate([types, pers[:, None]], axis=1)
    uniq, counts = np.unique(keyed, axis=0, return_counts=True)
    order = _type_key_order(math.gcd(m, n))
    records = [
        CensusRecord(MultSeq(tuple(int(v) for v in row[:-1])), int(row[-1]), int(c))
        for row, c in zip(uniq, counts)
    ]
    records.sort(key=lambda r: (order[r.type], r.period))
    return records


def census_by_type(records: list[CensusRecord]) -> Counter:
    """Collapse census records to ``{type: number of Dyck paths}``."""
    out: Counter = Counter()
    for r in records:
        out[r.type] += r.count
    return out
