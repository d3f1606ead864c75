from itertools import combinations, permutations

import pytest

from permcycle.patterns import (
    ClassId, PreconditionError, contains, ends_with_occurrence, in_class,
    in_restricted, max_position_check, occurrences, parse_class,
)
from permcycle.oracle import class_members

P312, P321 = ClassId.Class312_4321, ClassId.Class321_4123
BASIS = ["312", "4321", "321", "4123"]


def standardize(seq):
    ranks = sorted(seq)
    return tuple(ranks.index(v) + 1 for v in seq)


def contains_by_definition(values, pattern):
    pattern = tuple(pattern)
    return any(standardize([values[i] for i in idx]) == pattern
               for idx in combinations(range(len(values)), len(pattern)))


def test_paper_pattern_examples():
    assert contains("31562487", "123")
    assert not contains("31562487", "321")
    occ = occurrences("31562487", "312")
    p = (3, 1, 5, 6, 2, 4, 8, 7)
    picked = {tuple(p[i - 1] for i in idx) for idx in occ}
    assert (3, 1, 2) in picked and (5, 2, 4) in picked
    assert (1, 2, 5) in occ and (3, 5, 6) in occ
    assert occ == sorted(occ)


def test_occurrence_edge_cases():
    assert not contains("12", "123")
    assert occurrences("1234", "21") == []
    assert occurrences("4321", "321") == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]


@pytest.mark.parametrize("p, c, expected", [
    ("34526871", P312, True),
    ("2451673", P321, True),
    ("312", P312, False),
    ("4321", P312, False),
    ("4123", P321, False),
    ("", P312, True),
])
def test_in_class(p, c, expected):
    assert in_class(p, c) is expected


@pytest.mark.parametrize("p, c, expected", [
    ("2456317", P312, False),
    ("3241675", P312, True),
    ("2134756", P321, True),
    ("2451673", P321, False),
])
def test_in_restricted(p, c, expected):
    assert in_restricted(p, c) is expected


def test_in_restricted_precondition():
    with pytest.raises(PreconditionError):
        in_restricted("1", P321)


@pytest.mark.parametrize("p", ["345268719", "245167938", "12345", "1"])
def test_max_position_examples(p):
    assert max_position_check(p)


def test_max_position_false_outside_class():
    assert not max_position_check("51234")


def test_parse_class():
    assert parse_class("312,4321") is P312
    assert parse_class("321, 4123") is P321
    with pytest.raises(ValueError):
        parse_class("123,321")


@pytest.mark.parametrize("n", range(0, 9))
def test_contains_matches_definition_basis(n):
    for p in permutations(range(1, n + 1)):
        for s in BASIS:
            pat = tuple(int(ch) for ch in s)
            assert contains(p, pat) == contains_by_definition(p, pat)


@pytest.mark.parametrize("n", range(0, 7))
def test_contains_matches_definition_all_short_patterns(n):
    pats = [s for k in (3, 4) for s in permutations(range(1, k + 1))]
    for p in permutations(range(1, n + 1)):
        for s in pats:
            assert contains(p, s) == contains_by_definition(p, s)


def test_ends_with_occurrence_consistent():
    for p in permutations(range(1, 7)):
        for s in BASIS:
            pat = tuple(int(ch) for ch in s)
            uses_last = any(idx[-1] == len(p) for idx in occurrences(p, pat))
            assert ends_with_occurrence(p, pat) == uses_last


@pytest.mark.parametrize("c", list(ClassId))
def test_largest_value_in_last_three_positions(c):
    for n in range(1, 11):
        assert all(max_position_check(p) for p in class_members(c, n))


def test_avoidance_is_monotone_for_basis():
    # any permutation avoiding 312 or 321 avoids every pattern that contains it
    for p in permutations(range(1, 8)):
        if not contains(p, "312"):
            assert not contains(p, "4312") and not contains(p, "3124")
        if not contains(p, "321"):
            assert not contains(p, "4321") and not contains(p, "4213")
        if not contains(p, "4321"):
            assert not contains(p, "54321")
