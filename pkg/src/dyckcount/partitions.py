"""Multiplicity sequences and the identities built on them.

A :class:`MultSeq` ``a = (a_1, a_2, ...)`` records how many parts of each
size an integer partition has, so ``norm(a) = sum(i * a_i)`` is the
partitioned integer and ``size(a) = sum(a_i)`` the number of parts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .exceptions import PreconditionError

__all__ = [
    "MultSeq",
    "norm",
    "size",
    "support_len",
    "h",
    "sequences_with_norm",
    "below_set",
    "partition_terms",
    "exponential_partition_sum",
    "check_hh_identity",
    "check_coef_identity",
]


@dataclass(frozen=True)
class MultSeq:
    """Finitely supported sequence of non-negative integers.

    ``entries[i - 1]`` holds ``a_i``. Trailing zeros are trimmed on
    construction so ``MultSeq((3, 0, 0)) == MultSeq((3,))``.
    """

    entries: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        e = tuple(int(v) for v in self.entries)
        if any(v < 0 for v in e):
            raise PreconditionError(f"negative multiplicity in {e}")
        while e and e[-1] == 0:
            e = e[:-1]
        object.__setattr__(self, "entries", e)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> MultSeq:
        """Build the multiplicity sequence of a multiset of positive parts."""
        counts: list[int] = []
        for p in parts:
            if p < 1:
                raise PreconditionError(f"parts must be positive, got {p}")
            if p > len(counts):
                counts.extend([0] * (p - len(counts)))
            counts[p - 1] += 1
        return cls(tuple(counts))

    def mult(self, i: int) -> int:
        """Multiplicity a_i (1-based); zero beyond the stored support."""
        if i < 1:
            raise IndexError(i)
        return self.entries[i - 1] if i <= len(self.entries) else 0

    def parts(self) -> list[tuple[int, int]]:
        """Nonzero ``(part, multiplicity)`` pairs, smallest part first."""
        return [(i, v) for i, v in enumerate(self.entries, 1) if v]

    def leq(self, other: MultSeq) -> bool:
        """Componentwise order: a_i <= other_i for every i."""
        return all(v <= other.mult(i) for i, v in enumerate(self.entries, 1))

    def __add__(self, other: MultSeq) -> MultSeq:
        k = max(len(self.entries), len(other.entries))
        return MultSeq(tuple(self.mult(i) + other.mult(i) for i in range(1, k + 1)))

    def __sub__(self, other: MultSeq) -> MultSeq:
        k = max(len(self.entries), len(other.entries))
        return MultSeq(tuple(self.mult(i) - other.mult(i) for i in range(1, k + 1)))

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.entries)) + ")"


def norm(a: MultSeq) -> int:
    return sum(i * v for i, v in enumerate(a.entries, 1))


def size(a: MultSeq) -> int:
    return sum(a.entries)


def support_len(a: MultSeq) -> int:
    return sum(1 for v in a.entries if v)


def h(a: MultSeq) -> int:
    """Multinomial ``|a|! / prod(a_i!)``: the number of orderings of the parts."""
    out = math.factorial(size(a))
    for v in a.entries:
        out //= math.factorial(v)
    return out


def sequences_with_norm(d: int) -> Iterator[MultSeq]:
    """Yield every MultSeq with norm ``d`` exactly once.

    Order is reverse-lexicographic in ``(a_1, a_2, ...)``: for d = 3 this
    gives (3), (1, 1), (0, 0, 1). ``d = 0`` yields only the empty sequence.
    """
    if d < 0:
        raise PreconditionError(f"norm must be non-negative, got {d}")
    entries: list[int] = []

    def rec(i: int, rem: int) -> Iterator[MultSeq]:
        if rem == 0:
            yield MultSeq(tuple(entries))
            return
        if i > rem:
            return
        for k in range(rem // i, -1, -1):
            entries.append(k)
            yield from rec(i + 1, rem - k * i)
            entries.pop()

    yield from rec(1, d)


def below_set(c: MultSeq, j: int) -> Iterator[MultSeq]:
    """Yield all ``a <= c`` (componentwise) with ``size(a) == size(c) - j``."""
    total = size(c)
    if not 0 <= j < total:
        raise PreconditionError(f"below_set requires 0 <= j < |c| = {total}, got j={j}")
    target = total - j
    cap = c.entries
    # suffix[i] = most that positions i.. can still contribute
    suffix = [0] * (len(cap) + 1)
    for i in range(len(cap) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + cap[i]
    entries: list[int] = []

    def rec(i: int, rem: int) -> Iterator[MultSeq]:
        if i == len(cap):
            if rem == 0:
                yield MultSeq(tuple(entries))
            return
        hi = min(cap[i], rem)
        lo = max(0, rem - suffix[i + 1])
        for k in range(hi, lo - 1, -1):
            entries.append(k)
            yield from rec(i + 1, rem - k)
            entries.pop()

    yield from rec(0, target)


def check_hh_identity(c: MultSeq, j: int) -> bool:
    """Exact check of sum_{a in B_c^j} (||a||/|a|) h(a) h(c-a) == (||c||/|c|) h(c)."""
    if size(c) == 0:
        raise PreconditionError("hh identity needs |c| >= 1")
    lhs = sum(
        (Fraction(norm(a), size(a)) * h(a) * h(c - a) for a in below_set(c, j)),
        Fraction(0),
    )
    rhs = Fraction(norm(c), size(c)) * h(c)
    return lhs == rhs


def partition_terms(d: int, xs: Sequence[Fraction | int]) -> Iterator[tuple[MultSeq, Fraction]]:
    """Yield ``(a, prod_i x_i**a_i / a_i!)`` for each a with norm d.

    ``xs[i - 1]`` plays the role of ``x_i``; it must have at least d entries.
    """
    if len(xs) < d:
        raise PreconditionError(f"need {d} values, got {len(xs)}")
    vals = [Fraction(x) for x in xs[:d]]
    for a in sequences_with_norm(d):
        term = Fraction(1)
        for i, k in a.parts():
            term *= vals[i - 1] ** k / math.factorial(k)
        yield a, term


def exponential_partition_sum(d: int, xs: Sequence[Fraction | int]) -> Fraction:
    return sum((t for _, t in partition_terms(d, xs)), Fraction(0))


def check_coef_identity(d: int, xs: Sequence[Fraction | int]) -> bool:
    """Exact check of the polynomial identity behind the main formula.

    sum_{i=1}^{d} (i/d) x_i S_{d-i}(x) == S_d(x), where
    S_k(x) = sum_{||a||=k} prod_j x_j**a_j / a_j!.
    """
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    if len(xs) != d:
        raise PreconditionError(f"expected {d} values, got {len(xs)}")
    vals = [Fraction(x) for x in xs]
    lhs = sum(
        (Fraction(i, d) * vals[i - 1] * exponential_partition_sum(d - i, vals) for i in range(1, d + 1)),
        Fraction(0),
    )
    return lhs == exponential_partition_sum(d, vals)
