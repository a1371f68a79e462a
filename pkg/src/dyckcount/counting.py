"""Closed forms and recurrences for C(m, n), all in exact arithmetic.

``C(m, n)`` is the number of lattice paths from (0, 0) to (m, n) that never
rise above the line ``y = (n/m) x``. With ``d = gcd(m, n)``, ``p = m/d`` and
``q = n/d`` most formulas here work in terms of
``A_i = binom(i(p+q), ip) / (i(p+q))``.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import a_value, as_integer, binomial
from .exceptions import CrossCheckError, PreconditionError
from .partitions import MultSeq, partition_terms
from .paths import count_dp

__all__ = [
    "Method",
    "CountResult",
    "count",
    "count_coprime",
    "count_main",
    "count_recurrence",
    "count_fuss",
    "count_duchon",
    "duchon_parameter",
    "fuss_parameter",
    "catalan_sequence",
    "check_catalan_reduction",
    "check_fuss_recurrence",
]


class Method(str, enum.Enum):
    COPRIME = "coprime"
    MAIN = "main"
    RECURRENCE = "recurrence"
    FUSS = "fuss"
    DUCHON = "duchon"
    ORACLE = "oracle"


@dataclass(frozen=True)
class CountResult:
    value: int
    method: Method
    terms: list[tuple[MultSeq, Fraction]] | None = field(default=None, compare=False)


def _positive(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise PreconditionError(f"m and n must be positive integers, got ({m}, {n})")


def _a_values(m: int, n: int) -> list[Fraction]:
    d = math.gcd(m, n)
    p, q = m // d, n // d
    return [a_value(i * p, i * q) for i in range(1, d + 1)]


def count_coprime(m: int, n: int) -> int:
    _positive(m, n)
    if math.gcd(m, n) != 1:
        raise PreconditionError(f"coprime formula needs gcd(m, n) = 1, got gcd({m}, {n}) = {math.gcd(m, n)}")
    return as_integer(a_value(m, n), f"C({m}, {n})")


def count_main(m: int, n: int) -> CountResult:
    """Sum over partitions a of gcd(m, n) of prod_i A_i**a_i / a_i!.

    Individual terms are generally not integers; only the total is.
    """
    _positive(m, n)
    d = math.gcd(m, n)
    terms = list(partition_terms(d, _a_values(m, n)))
    total = sum((t for _, t in terms), Fraction(0))
    return CountResult(as_integer(total, f"main-formula total for ({m}, {n})"), Method.MAIN, terms)


def count_recurrence(m: int, n: int) -> int:
    """``Ct_k = sum_{i=1}^{k} (i/k) A_i Ct_{k-i}`` with ``Ct_0 = 1``; returns Ct_d."""
    _positive(m, n)
    d = math.gcd(m, n)
    a = _a_values(m, n)
    ct = [1]
    for k in range(1, d + 1):
        v = sum((Fraction(i, k) * a[i - 1] * ct[k - i] for i in range(1, k + 1)), Fraction(0))
        ct.append(as_integer(v, f"recurrence value at k={k} for ({m}, {n})"))
    return ct[d]


def count_fuss(k: int, n: int) -> int:
    """Fuss-Catalan number C(kn, n) = binom((k+1)n, n) / (kn + 1)."""
    if k < 1 or n < 1:
        raise PreconditionError(f"k and n must be positive, got ({k}, {n})")
    return as_integer(Fraction(binomial((k + 1) * n, n), k * n + 1), f"C({k * n}, {n})")


def _duchon_sum(ell: int) -> Fraction:
    # terms with i > ell vanish because binom(5l+1, l-i) = 0 there
    return sum(
        (
            Fraction(binomial(5 * ell + 1, ell - i) * binomial(5 * ell + 2 * i, i), 5 * ell + i + 1)
            for i in range(0, ell + 1)
        ),
        Fraction(0),
    )


def count_duchon(ell: int, cross_check: bool = True) -> int:
    """Duchon's closed form for C(2l, 3l).

    With ``cross_check`` the value is compared against :func:`count_main`.
    """
    if ell < 1:
        raise PreconditionError(f"l must be positive, got {ell}")
    value = as_integer(_duchon_sum(ell), f"Duchon sum at l={ell}")
    if cross_check:
        main = count_main(2 * ell, 3 * ell).value
        if main != value:
            raise CrossCheckError(f"Duchon formula gives {value} but main formula gives {main} at l={ell}")
    return value


def fuss_parameter(m: int, n: int) -> int | None:
    """k with m = k*n, or None."""
    return m // n if m % n == 0 else None


def duchon_parameter(m: int, n: int) -> int | None:
    """l with (m, n) = (2l, 3l), or None."""
    if m % 2 == 0 and n % 3 == 0 and m // 2 == n // 3:
        return m // 2
    return None


def catalan_sequence(nmax: int) -> list[int]:
    """[C_0, ..., C_nmax] from C_0 = 1, C_k = sum_i C_i C_{k-1-i}."""
    if nmax < 0:
        raise PreconditionError(f"nmax must be non-negative, got {nmax}")
    c = [1]
    for k in range(1, nmax + 1):
        c.append(sum(c[i] * c[k - 1 - i] for i in range(k)))
    return c


def check_catalan_reduction(n: int, i: int) -> bool:
    """Exact check that the i-th and (n-i+1)-th terms of the diagonal
    recurrence pair up to 2 C_{n-i} C_{i-1}."""
    if not 1 <= i <= n:
        raise PreconditionError(f"need 1 <= i <= n, got i={i}, n={n}")
    c = catalan_sequence(n)
    j = n - i + 1
    lhs = Fraction(i, n) * a_value(i, i) * c[n - i] + Fraction(j, n) * a_value(j, j) * c[i - 1]
    return lhs == 2 * c[n - i] * c[i - 1]


def _compositions(total: int, parts: int):
    """Tuples of ``parts`` non-negative integers summing to ``total``."""
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def check_fuss_recurrence(k: int, n: int) -> bool:
    """C(kn, n) == sum over (n_1..n_{k+1}) summing to n-1 of prod C(k n_i, n_i)."""
    if k < 1 or n < 1:
        raise PreconditionError(f"k and n must be positive, got ({k}, {n})")
    vals = [1] + [count_fuss(k, j) for j in range(1, n)]
    rhs = 0
    for comp in _compositions(n - 1, k + 1):
        prod = 1
        for part in comp:
            prod *= vals[part]
        rhs += prod
    return rhs == count_fuss(k, n)


def count(m: int, n: int, method: Method | str = Method.MAIN) -> CountResult:
    """Dispatch C(m, n) to one method, rejecting inapplicable inputs."""
    _positive(m, n)
    method = Method(method)
    if method is Method.MAIN:
        return count_main(m, n)
    if method is Method.RECURRENCE:
        return CountResult(count_recurrence(m, n), method)
    if method is Method.COPRIME:
        return CountResult(count_coprime(m, n), method)
    if method is Method.ORACLE:
        return CountResult(count_dp(m, n), method)
    if method is Method.FUSS:
        # C is symmetric, so (n, kn) is served as well as (kn, n)
        k = fuss_parameter(m, n)
        if k is not None:
            return CountResult(count_fuss(k, n), method)
        k = fuss_parameter(n, m)
        if k is not None:
            return CountResult(count_fuss(k, m), method)
        raise PreconditionError(f"fuss method needs m = k*n or n = k*m, got ({m}, {n})")
    ell = duchon_parameter(m, n)
    if ell is None:
        ell = duchon_parameter(n, m)
    if ell is None:
        raise PreconditionError(f"duchon method needs (m, n) = (2l, 3l) or (3l, 2l), got ({m}, {n})")
    return CountResult(count_duchon(ell), method)
