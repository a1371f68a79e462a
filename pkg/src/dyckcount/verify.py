"""Executable identity suites.

Each suite is a generator of :class:`CheckResult` items, one per parameter
case, so the CLI can stream pass/fail lines and the tests can assert on
them. ``limit`` bounds the parameter range; what it bounds depends on the
suite (see ``LIMIT_MEANING``).
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from . import kernels
from .arith import a_value, binomial
from .counting import (
    catalan_sequence,
    check_catalan_reduction,
    check_fuss_recurrence,
    count_coprime,
    count_duchon,
    count_fuss,
    count_main,
    count_recurrence,
)
from .partitions import (
    MultSeq,
    below_set,
    check_coef_identity,
    check_hh_identity,
    h,
    sequences_with_norm,
    size,
)
from .paths import census, census_by_type, count_dp, primitive_counts

__all__ = [
    "CheckResult",
    "SUITES",
    "DEFAULT_LIMITS",
    "LIMIT_MEANING",
    "run_suite",
    "random_rationals",
]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    case: str
    passed: bool
    detail: str = ""


def _result(suite: str, case: str, failures: list[str]) -> CheckResult:
    return CheckResult(suite, case, not failures, "; ".join(failures))


def coprime_pairs_by_total(limit: int) -> Iterator[tuple[int, int, int]]:
    """``(p, q, d)`` with gcd(p, q) = 1 and d*(p+q) <= limit."""
    for total in range(2, limit + 1):
        for p in range(1, total):
            q = total - p
            if math.gcd(p, q) != 1:
                continue
            for d in range(1, limit // total + 1):
                yield p, q, d


# -- cycle lemma -------------------------------------------------------------

def rotation_facts(m: int, n: int, backend: str | None = None) -> list[str]:
    """Check the rotation-class facts for every word to (m, n); return failures."""
    L = m + n
    g = math.gcd(m, n)
    masks = kernels.enumerate_masks(m, n, backend)
    dyck, shift = kernels.scan_heights(masks, m, n, backend)
    per = kernels.periods(masks, L, backend)
    cid = kernels.class_ids(masks, L, backend)
    _, inverse, class_size = np.unique(cid, return_inverse=True, return_counts=True)
    dyck_per_class = np.bincount(inverse, weights=dyck.astype(np.int64)).astype(np.int64)

    bad = []
    if len(masks) != binomial(L, n):
        bad.append(f"enumerated {len(masks)} words, expected {binomial(L, n)}")
    if not np.array_equal(class_size[inverse], per):
        bad.append("class size differs from period")
    if np.any(g % (L // per) != 0) or np.any(L % per != 0):
        bad.append("(m+n)/period does not divide gcd(m, n)")
    if np.any(dyck_per_class < 1):
        bad.append("a rotation class has no Dyck path")
    if g == 1:
        if np.any(dyck_per_class != 1):
            bad.append("coprime rotation class without a unique Dyck path")
        if np.any(per != L):
            bad.append("coprime word with period below m+n")
        c = count_dp(m, n)
        if binomial(L, n) != L * c:
            bad.append(f"binom({L},{n}) != {L} * C({m},{n}) = {L * c}")
        if len(class_size) != c:
            bad.append(f"{len(class_size)} classes but C({m},{n}) = {c}")
    rotated = kernels.rotate_masks(masks, shift, L, backend)
    rot_dyck, _ = kernels.scan_heights(rotated, m, n, backend)
    if not rot_dyck.all():
        bad.append("canonical rotation is not Dyck")
    if not np.array_equal(kernels.class_ids(rotated, L, backend), cid):
        bad.append("canonical rotation left its class")
    return bad


def suite_cycle_lemma(limit: int) -> Iterator[CheckResult]:
    for total in range(2, limit + 1):
        for m in range(1, total):
            n = total - m
            yield _result("cycle-lemma", f"m={m} n={n}", rotation_facts(m, n))


# -- partition identities ----------------------------------------------------

def suite_hh(limit: int, max_entry: int = 3) -> Iterator[CheckResult]:
    """Every c supported in {1..limit} with entries <= max_entry, all valid j."""
    for entries in itertools.product(range(max_entry + 1), repeat=limit):
        c = MultSeq(entries)
        if size(c) == 0:
            continue
        bad = [f"j={j}" for j in range(size(c)) if not check_hh_identity(c, j)]
        if size(c) >= 2 and sum(h(cp) for cp in below_set(c, 1)) != h(c):
            bad.append("sum of h over B_c^1 differs from h(c)")
        yield _result("hh", f"c={c}", bad)


def random_rationals(rng: random.Random, count: int, bound: int = 20) -> list[Fraction]:
    return [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(count)]


def suite_coef(limit: int, points: int = 100, seed: int = 20240101) -> Iterator[CheckResult]:
    rng = random.Random(seed)
    for d in range(1, limit + 1):
        bad = []
        for _ in range(points):
            xs = random_rationals(rng, d)
            if not check_coef_identity(d, xs):
                bad.append(f"xs={[str(x) for x in xs]}")
        yield _result("coef", f"d={d} points={points}", bad)


# -- census identities -----------------------------------------------------

def _d_power(a: MultSeq, prim: list[int]) -> int:
    out = 1
    for i, k in a.parts():
        out *= prim[i - 1] ** k
    return out


def suite_chad(limit: int) -> Iterator[CheckResult]:
    for p, q, d in coprime_pairs_by_total(limit):
        bad = []
        prim = primitive_counts(p, q, d)
        by_type = census_by_type(census(d * p, d * q))
        expected_types = set(sequences_with_norm(d))
        if not set(by_type) <= expected_types:
            bad.append(f"census types outside norm {d}: {sorted(map(str, set(by_type) - expected_types))}")
        total = 0
        for a in expected_types:
            want = h(a) * _d_power(a, prim)
            total += want
            if by_type.get(a, 0) != want:
                bad.append(f"type {a}: census {by_type.get(a, 0)} != h*D^a {want}")
        if total != count_dp(d * p, d * q):
            bad.append(f"sum h(a) D^a = {total} != C({d * p},{d * q})")
        yield _result("chad", f"p={p} q={q} d={d}", bad)


def suite_ahad(limit: int) -> Iterator[CheckResult]:
    for p, q, d in coprime_pairs_by_total(limit):
        m, n = d * p, d * q
        L = m + n
        bad = []
        prim = primitive_counts(p, q, d)
        rhs = sum(
            (Fraction(h(a) * _d_power(a, prim), size(a)) for a in sequences_with_norm(d)),
            Fraction(0),
        )
        if rhs != a_value(m, n):
            bad.append(f"A = {a_value(m, n)} != sum h D^a / |a| = {rhs}")
        records = census(m, n)
        by_type = census_by_type(records)
        for a, cnt in by_type.items():
            if cnt != h(a) * _d_power(a, prim):
                bad.append(f"sum_r E({a}, r) = {cnt} != h*D^a")
        for r in records:
            if L % r.period or any(v % (L // r.period) for v in r.type.entries):
                bad.append(f"period {r.period} not admissible for type {r.type}")
        # class-size law: Dyck paths per class = period * |type| / (m + n)
        masks = kernels.enumerate_masks(m, n)
        dyck, _ = kernels.scan_heights(masks, m, n)
        cid = kernels.class_ids(masks, L)
        _, inverse = np.unique(cid, return_inverse=True)
        per_class = np.bincount(inverse, weights=dyck.astype(np.int64)).astype(np.int64)
        dm = masks[dyck]
        parts = kernels.type_matrix(dm, m, n).sum(axis=1)
        per = kernels.periods(dm, L)
        if not np.array_equal(per_class[inverse[dyck]] * L, per * parts):
            bad.append("Dyck count per class differs from period*|type|/(m+n)")
        yield _result("ahad", f"p={p} q={q} d={d}", bad)


# -- closed forms --------------------------------------------------------------

def suite_duchon(limit: int) -> Iterator[CheckResult]:
    for ell in range(1, limit + 1):
        bad = []
        v = count_duchon(ell, cross_check=False)
        main = count_main(2 * ell, 3 * ell).value
        oracle = count_dp(2 * ell, 3 * ell)
        if not v == main == oracle:
            bad.append(f"duchon {v}, main {main}, dp {oracle}")
        yield _result("duchon", f"l={ell}", bad)


def suite_catalan(limit: int) -> Iterator[CheckResult]:
    cat = catalan_sequence(limit)
    for n in range(1, limit + 1):
        bad = [f"i={i}" for i in range(1, n + 1) if not check_catalan_reduction(n, i)]
        main = count_main(n, n).value
        if main != cat[n]:
            bad.append(f"C_{n} = {cat[n]} but main formula gives {main}")
        yield _result("catalan", f"n={n}", bad)


def suite_fuss(limit: int, kmax: int = 4, kmax_recurrence: int = 3) -> Iterator[CheckResult]:
    for k in range(1, kmax + 1):
        for n in range(1, limit + 1):
            bad = []
            v = count_fuss(k, n)
            oracle = count_dp(k * n, n)
            main = count_main(k * n, n).value
            if not v == oracle == main:
                bad.append(f"fuss {v}, dp {oracle}, main {main}")
            if k <= kmax_recurrence and not check_fuss_recurrence(k, n):
                bad.append("tuple recurrence fails")
            yield _result("fuss", f"k={k} n={n}", bad)


def suite_oracle(limit: int) -> Iterator[CheckResult]:
    for m in range(1, limit + 1):
        for n in range(1, limit + 1):
            oracle = count_dp(m, n)
            got = {"main": count_main(m, n).value, "recurrence": count_recurrence(m, n)}
            if math.gcd(m, n) == 1:
                got["coprime"] = count_coprime(m, n)
            if m % n == 0:
                got["fuss"] = count_fuss(m // n, n)
            if m % 2 == 0 and n % 3 == 0 and m // 2 == n // 3:
                got["duchon"] = count_duchon(m // 2, cross_check=False)
            bad = [f"{k} {v} != dp {oracle}" for k, v in got.items() if v != oracle]
            yield _result("oracle", f"m={m} n={n}", bad)


SUITES: dict[str, Callable[[int], Iterator[CheckResult]]] = {
    "cycle-lemma": suite_cycle_lemma,
    "hh": suite_hh,
    "coef": suite_coef,
    "chad": suite_chad,
    "ahad": suite_ahad,
    "duchon": suite_duchon,
    "catalan": suite_catalan,
    "fuss": suite_fuss,
    "oracle": suite_oracle,
}

DEFAULT_LIMITS = {
    "cycle-lemma": 14,
    "hh": 4,
    "coef": 6,
    "chad": 14,
    "ahad": 14,
    "duchon": 5,
    "catalan": 30,
    "fuss": 5,
    "oracle": 12,
}

LIMIT_MEANING = {
    "cycle-lemma": "max m+n",
    "hh": "support positions (entries <= 3)",
    "coef": "max number of variables d",
    "chad": "max d*(p+q)",
    "ahad": "max d*(p+q)",
    "duchon": "max l",
    "catalan": "max n",
    "fuss": "max n (k <= 4; recurrence k <= 3)",
    "oracle": "max m and n",
}


def run_suite(name: str, limit: int | None = None) -> Iterator[CheckResult]:
    names = list(SUITES) if name == "all" else [name]
    for s in names:
        yield from SUITES[s](DEFAULT_LIMITS[s] if limit is None else limit)
