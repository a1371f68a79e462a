"""Exit criteria. Each test prints one PASS/FAIL line in the terminal summary."""
import math
import random
import time
from fractions import Fraction

import pytest

from dyckcount import kernels
from dyckcount.arith import binomial
from dyckcount.counting import (
    catalan_sequence,
    check_catalan_reduction,
    check_fuss_recurrence,
    count_coprime,
    count_duchon,
    count_fuss,
    count_main,
    count_recurrence,
)
from dyckcount.partitions import MultSeq, check_coef_identity, check_hh_identity, size
from dyckcount.paths import count_dp
from dyckcount.verify import random_rationals, rotation_facts, suite_ahad, suite_chad

pytestmark = pytest.mark.acceptance


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def test_criterion_1_worked_example():
    r = count_main(3, 3)
    assert r.value == 5
    assert [t for _, t in r.terms] == [Fraction(1, 6), Fraction(3, 2), Fraction(10, 3)]
    best = min(_timed(lambda: count_main(3, 3)) for _ in range(50))
    assert best < 1e-3, f"best of 50 runs took {best * 1e3:.3f} ms"


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def test_criterion_2_oracle_equivalence():
    with Budget(5):
        coprime = 0
        for m in range(1, 13):
            for n in range(1, 13):
                oracle = count_dp(m, n)
                assert count_main(m, n).value == oracle, (m, n)
                assert count_recurrence(m, n) == oracle, (m, n)
                if math.gcd(m, n) == 1:
                    coprime += 1
                    assert count_coprime(m, n) == oracle, (m, n)
        # the full range has 91 ordered coprime pairs, (1, 1) included
        assert coprime == 91


@pytest.mark.parametrize("backend", kernels.BACKENDS)
def test_criterion_3_cycle_lemma(backend):
    with Budget(60):
        for total in range(2, 15):
            for m in range(1, total):
                n = total - m
                assert rotation_facts(m, n, backend) == [], (m, n)
                if math.gcd(m, n) == 1:
                    assert binomial(total, n) == total * count_dp(m, n)


def test_criterion_4_chad_and_ahad():
    with Budget(60):
        results = list(suite_chad(14)) + list(suite_ahad(14))
        failed = [r for r in results if not r.passed]
        assert not failed, failed[:3]
        assert len(results) == 2 * 91


def test_criterion_5_hh():
    import itertools

    with Budget(10):
        cases = 0
        for entries in itertools.product(range(4), repeat=4):
            c = MultSeq(entries)
            for j in range(size(c)):
                assert check_hh_identity(c, j), (c, j)
                cases += 1
        assert cases == 1536


def test_criterion_6_coef_identity():
    with Budget(5):
        rng = random.Random(20240101)
        for d in range(1, 7):
            for _ in range(100):
                xs = random_rationals(rng, d)
                assert check_coef_identity(d, xs), (d, xs)


def test_criterion_7_fuss():
    with Budget(30):
        for k in range(1, 5):
            for n in range(1, 6):
                assert count_fuss(k, n) == count_dp(k * n, n), (k, n)
        for k in range(1, 4):
            for n in range(1, 6):
                assert check_fuss_recurrence(k, n), (k, n)


def test_criterion_8_duchon():
    with Budget(5):
        for ell in range(1, 6):
            assert count_duchon(ell) == count_main(2 * ell, 3 * ell).value
        assert count_duchon(1) == 2 == count_dp(2, 3)
        assert count_duchon(2) == 23 == count_dp(4, 6)


def test_criterion_9_catalan():
    with Budget(5):
        for n in range(1, 31):
            for i in range(1, n + 1):
                assert check_catalan_reduction(n, i), (n, i)
        cat = catalan_sequence(10)
        for n in range(1, 11):
            assert cat[n] == count_main(n, n).value
