"""Classical pattern containment and membership in the two classes
Av(312, 4321) and Av(321, 4123)."""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Sequence

from .perm_core import PermLike, as_perm

__all__ = [
    "ClassId", "PreconditionError", "contains", "occurrences", "avoids",
    "in_class", "in_restricted", "max_position_check", "parse_class",
]


class PreconditionError(ValueError):
    pass


class ClassId(enum.Enum):
    """The two permutation classes studied here, keyed by their basis."""

    Class312_4321 = "312,4321"
    Class321_4123 = "321,4123"

    @property
    def patterns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(ch) for ch in word) for word in self.value.split(","))

    def __str__(self) -> str:
        return self.value


def parse_class(text: str) -> ClassId:
    key = text.replace(" ", "")
    for c in ClassId:
        if c.value == key or c.name == text:
            return c
    raise ValueError(f"unknown class {text!r}; expected one of {[c.value for c in ClassId]}")


def _pattern_values(s) -> tuple[int, ...]:
    return as_perm(s).values


def _order_isomorphic(seq: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    for a in range(k):
        for b in range(a + 1, k):
            if (seq[a] < seq[b]) != (pattern[a] < pattern[b]):
                return False
    return True


def _iter_occurrences(values: Sequence[int], pattern: Sequence[int]):
    # combinations() yields index tuples in lexicographic order
    for idx in combinations(range(len(values)), len(pattern)):
        if _order_isomorphic([values[i] for i in idx], pattern):
            yield idx


def contains_values(values: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    if k > len(values):
        return False
    if k == 0:
        return True
    return next(_iter_occurrences(values, pattern), None) is not None


def ends_with_occurrence(values: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some occurrence of ``pattern`` uses the last entry of ``values``.

    Used to prune prefix-by-prefix generation: a prefix that avoids the pattern
    keeps avoiding it after an append unless this returns True.
    """
    k = len(pattern)
    n = len(values)
    if k > n or k == 0:
        return k == 0
    last = values[-1]
    top = pattern[-1]
    head = pattern[:-1]
    for idx in combinations(range(n - 1), k - 1):
        # cheap rejection on the comparison with the last entry first
        ok = True
        for r, i in enumerate(idx):
            if (values[i] < last) != (head[r] < top):
                ok = False
                break
        if ok and _order_isomorphic([values[i] for i in idx], head):
            return True
    return False


def contains(p: PermLike, s: PermLike) -> bool:
    return contains_values(as_perm(p).values, _pattern_values(s))


def avoids(p: PermLike, *patterns: PermLike) -> bool:
    values = as_perm(p).values
    return not any(contains_values(values, _pattern_values(s)) for s in patterns)


def occurrences(p: PermLike, s: PermLike) -> list[tuple[int, ...]]:
    """All occurrences of ``s`` in ``p`` as 1-based index tuples, lexicographically ordered."""
    values = as_perm(p).values
    return [tuple(i + 1 for i in idx) for idx in _iter_occurrences(values, _pattern_values(s))]


def in_class_values(values: Sequence[int], c: ClassId) -> bool:
    return not any(contains_values(values, s) for s in c.patterns)


def in_class(p: PermLike, c: ClassId) -> bool:
    return in_class_values(as_perm(p).values, c)


def restricted_values(values: Sequence[int], c: ClassId) -> bool:
    """Membership in S'_m (last entry not fixed) or S''_m (value m not at position m-1)."""
    m = len(values)
    if c is ClassId.Class312_4321:
        if m < 1:
            raise PreconditionError("S' needs size >= 1")
        extra = values[m - 1] != m
    else:
        if m < 2:
            raise PreconditionError("S'' needs size >= 2")
        extra = values[m - 2] != m
    return extra and in_class_values(values, c)


def in_restricted(p: PermLike, c: ClassId) -> bool:
    return restricted_values(as_perm(p).values, c)


def max_position_check(p: PermLike) -> bool:
    """Whether the largest value sits in one of the last three positions."""
    values = as_perm(p).values
    n = len(values)
    if n == 0:
        return True
    return values.index(n) + 1 >= n - 2
