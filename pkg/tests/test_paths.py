import math
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dyckcount.exceptions import EnumerationLimitError, PreconditionError
from dyckcount.partitions import MultSeq, h, norm, sequences_with_norm, size
from dyckcount.paths import (
    CensusRecord,
    PathWord,
    canonical_dyck,
    census,
    census_by_type,
    count_dp,
    enum_limit,
    enumerate_paths,
    height,
    is_dyck,
    period,
    primitive_counts,
    rotate,
    rotation_class,
    shape,
    type_of,
)

from oracles import brute_count, words

path_words = st.lists(st.sampled_from("xy"), min_size=1, max_size=16).map("".join)


def test_pathword_counts_and_normalises_case():
    p = PathWord("XyXXy")
    assert (p.steps, p.m, p.n, len(p)) == ("xyxxy", 3, 2, 5)


@pytest.mark.parametrize("bad", ["", "xz", "x y"])
def test_pathword_rejects_garbage(bad):
    with pytest.raises(PreconditionError):
        PathWord(bad)


@pytest.mark.parametrize("m, n, prefix, expected", [(5, 3, "xy", -2), (4, 7, "", 0), (3, 2, "xxy", 1)])
def test_height(m, n, prefix, expected):
    assert height(m, n, prefix) == expected


@pytest.mark.parametrize("word, expected", [("xxyxy", True), ("xyxxy", False), ("xxxxyyy", True), ("yx", False)])
def test_is_dyck(word, expected):
    assert is_dyck(word) is expected


def test_rotate_examples():
    assert rotate("xyxxy", 2) == PathWord("xxyxy")
    assert rotate("xyxxy", 5) == PathWord("xyxxy")
    assert rotate("xyxxy", 0) == PathWord("xyxxy")
    assert [str(rotate("xyxxy", s)) for s in range(1, 6)] == ["yxxyx", "xxyxy", "xyxyx", "yxyxx", "xyxxy"]


@pytest.mark.parametrize("word, expected", [("xyxy", 2), ("xyxxy", 5), ("xxyy", 4), ("xyxyxy", 2)])
def test_period(word, expected):
    assert period(word) == expected


def test_rotation_class_examples():
    assert {str(w) for w in rotation_class("xyxxy")} == {"yxxyx", "xxyxy", "xyxyx", "yxyxx", "xyxxy"}
    assert {str(w) for w in rotation_class("xyxy")} == {"xyxy", "yxyx"}
    assert len(rotation_class("xxyy")) == 4


def test_canonical_dyck_examples():
    assert canonical_dyck("xyxxy") == PathWord("xxyxy")
    assert canonical_dyck("yx") == PathWord("xy")
    assert canonical_dyck("xxyxy") == PathWord("xxyxy")


def test_canonical_dyck_fixes_dyck_words():
    for m, n in [(3, 2), (4, 4), (2, 6)]:
        for w in words(m, n):
            if is_dyck(w):
                assert canonical_dyck(w) == PathWord(w)


@pytest.mark.parametrize(
    "word, parts, typ",
    [
        ("xyxy", (1, 1), (2,)),
        ("xxyy", (2,), (0, 1)),
        ("xxyxy", (1,), (1,)),
        ("xyxxyyxy", (1, 2, 1), (2, 1)),
    ],
)
def test_shape_and_type(word, parts, typ):
    assert shape(word).parts == parts
    assert type_of(word) == MultSeq(typ)


def test_shape_rejects_non_dyck():
    with pytest.raises(PreconditionError):
        shape("yx")
    with pytest.raises(PreconditionError):
        type_of("xyyx")


def test_enumerate_paths_examples():
    assert [str(p) for p in enumerate_paths(1, 1)] == ["xy", "yx"]
    assert [str(p) for p in enumerate_paths(2, 1)] == ["xxy", "xyx", "yxx"]
    assert len(list(enumerate_paths(3, 2))) == 10


def test_enumerate_paths_matches_brute_force():
    for m in range(1, 6):
        for n in range(1, 6):
            assert [str(p) for p in enumerate_paths(m, n)] == words(m, n)


def test_enumeration_limit(monkeypatch):
    assert enum_limit() == 24
    with pytest.raises(EnumerationLimitError):
        next(enumerate_paths(13, 12))
    monkeypatch.setenv("DYCK_ENUM_LIMIT", "6")
    assert enum_limit() == 6
    with pytest.raises(EnumerationLimitError):
        census(4, 3)
    assert len(census(3, 3)) == 3
    monkeypatch.setenv("DYCK_ENUM_LIMIT", "lots")
    with pytest.raises(PreconditionError):
        enum_limit()


@pytest.mark.parametrize("m, n, strict, expected", [(1, 1, False, 1), (3, 3, False, 5), (2, 2, True, 1), (5, 3, False, 7)])
def test_count_dp_examples(m, n, strict, expected):
    assert count_dp(m, n, strict) == expected


def test_count_dp_matches_brute_force():
    for m in range(1, 9):
        for n in range(1, 17 - m):
            if m + n > 16:
                continue
            assert count_dp(m, n) == brute_count(m, n)
            assert count_dp(m, n, strict=True) == brute_count(m, n, strict=True)


def test_count_dp_matches_is_dyck_enumeration():
    for total in range(2, 17):
        for m in range(1, total):
            n = total - m
            assert count_dp(m, n) == sum(is_dyck(p) for p in enumerate_paths(m, n))


def test_count_dp_symmetric():
    for m in range(1, 13):
        for n in range(1, 13):
            assert count_dp(m, n) == count_dp(n, m)


def test_primitive_counts_examples():
    assert primitive_counts(1, 1, 3) == [1, 1, 2]
    assert primitive_counts(1, 2, 1) == [1]
    for p, q in [(2, 3), (3, 5), (1, 4)]:
        assert primitive_counts(p, q, 1) == [count_dp(p, q)]


def test_primitive_counts_catalan_first_return():
    # D(d,d) = C_{d-1}
    cat = [1, 1, 2, 5, 14, 42, 132]
    assert primitive_counts(1, 1, 7) == cat


def test_primitive_counts_rejects_non_coprime():
    with pytest.raises(PreconditionError):
        primitive_counts(2, 4, 2)


def test_census_examples():
    assert census(1, 1) == [CensusRecord(MultSeq((1,)), 2, 1)]
    assert census(2, 2) == [CensusRecord(MultSeq((2,)), 2, 1), CensusRecord(MultSeq((0, 1)), 4, 1)]
    assert sum(r.count for r in census(3, 3)) == 5


def _census_by_strings(m, n):
    out = Counter()
    for w in words(m, n):
        if is_dyck(w):
            out[(type_of(w), period(w))] += 1
    return out


@pytest.mark.parametrize("m, n", [(2, 2), (3, 3), (4, 2), (4, 6), (6, 6), (3, 6), (5, 5)])
def test_census_matches_string_reference(m, n):
    got = {(r.type, r.period): r.count for r in census(m, n)}
    assert got == dict(_census_by_strings(m, n))


def test_census_sum_over_periods_is_h_times_d_power():
    for p, q, d in [(1, 1, 6), (1, 2, 4), (2, 3, 2), (1, 3, 3)]:
        prim = primitive_counts(p, q, d)
        by_type = census_by_type(census(d * p, d * q))
        for a in sequences_with_norm(d):
            dpow = math.prod(prim[i - 1] ** k for i, k in a.parts())
            assert by_type[a] == h(a) * dpow


def test_type_norm_equals_gcd():
    for m, n in [(4, 6), (6, 3), (4, 4), (5, 3)]:
        for w in words(m, n):
            if is_dyck(w):
                assert norm(type_of(w)) == math.gcd(m, n)
                assert shape(w).total == math.gcd(m, n)


def test_class_size_law():
    # Dyck paths in [P] = per(P) * |type(P)| / (m + n)
    for m, n in [(4, 4), (4, 6), (6, 3), (2, 6)]:
        for w in words(m, n):
            if is_dyck(w):
                dyck_in_class = sum(is_dyck(v) for v in rotation_class(w))
                assert dyck_in_class * (m + n) == period(w) * size(type_of(w))


@given(path_words, st.integers(-40, 40), st.integers(-40, 40))
def test_rotations_compose(word, s, t):
    assert rotate(rotate(word, s), t) == rotate(word, s + t)
    assert rotate(word, len(word)) == PathWord(word)


@given(path_words)
def test_period_and_class_laws(word):
    p = PathWord(word)
    per = period(p)
    assert len(rotation_class(p)) == per
    g = math.gcd(p.m, p.n)
    assert g % (len(p) // per) == 0
    if g == 1:
        assert per == len(p)


@given(path_words)
def test_canonical_rotation_is_dyck_member(word):
    c = canonical_dyck(word)
    assert is_dyck(c)
    assert c in rotation_class(word)
    if math.gcd(c.m, c.n) == 1:
        assert sum(is_dyck(v) for v in rotation_class(word)) == 1
