"""Brute-force ground truth.

Permutations of [n] are generated depth first in lexicographic order. For a
class query, a prefix is abandoned as soon as its newest entry completes an
occurrence of a basis pattern; any completion of such a prefix would contain
the pattern too, so this prunes without losing members. Everything else
(statistics, involution filter) is evaluated directly on the leaves.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .patterns import ClassId, ends_with_occurrence, parse_class
from .perm_core import Permutation, stat_tuple
from .series import MultiPoly

__all__ = [
    "DEFAULT_CAP", "ResourceGuardError", "DistributionQuery", "size_cap",
    "enumerate_class", "class_members", "distribution", "count_cyclic",
    "mahonian", "Mismatch", "crosscheck",
]

DEFAULT_CAP = 11


class ResourceGuardError(RuntimeError):
    """Requested size exceeds the configured cap."""


def size_cap() -> int:
    env = os.environ.get("PERMCYCLE_MAX_N")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class DistributionQuery:
    cls: Optional[ClassId]
    n: int
    involutions_only: bool = False
    cap: Optional[int] = None

    def __post_init__(self):
        if isinstance(self.cls, str):
            object.__setattr__(self, "cls", parse_class(self.cls))
        if self.n < 0:
            raise ValueError("n must be >= 0")

    def check_cap(self) -> None:
        cap = self.cap if self.cap is not None else size_cap()
        if self.n > cap:
            raise ResourceGuardError(
                f"n={self.n} exceeds the size cap {cap}; raise it with PERMCYCLE_MAX_N")


def _blocks(n: int) -> list[tuple[int, ...]]:
    """Lexicographic blocks of S_n: all length-2 prefixes (length 1 or 0 for tiny n)."""
    depth = min(n, 2)
    return [p for p in permutations(range(1, n + 1), depth)]


def _walk(n: int, patterns: Sequence[Sequence[int]], prefix: tuple[int, ...],
          lemma_shortcut: bool) -> Iterator[tuple[int, ...]]:
    # check the given prefix incrementally before extending it
    for d in range(1, len(prefix) + 1):
        if any(ends_with_occurrence(prefix[:d], s) for s in patterns):
            return
        if lemma_shortcut and prefix[d - 1] == n and d < n - 2:
            return
    if not patterns and not lemma_shortcut:
        rest = sorted(set(range(1, n + 1)) - set(prefix))
        for tail in permutations(rest):
            yield prefix + tail
        return

    used = [False] * (n + 1)
    for v in prefix:
        used[v] = True
    seq = list(prefix)

    def extend():
        d = len(seq)
        if d == n:
            yield tuple(seq)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            # the largest value must land in one of the last three positions
            if lemma_shortcut and v == n and d + 1 < n - 2:
                continue
            seq.append(v)
            if not any(ends_with_occurrence(seq, s) for s in patterns):
                used[v] = True
                yield from extend()
                used[v] = False
            seq.pop()

    yield from extend()


def _iter_values(cls: Optional[ClassId], n: int, *, involutions_only: bool = False,
                 blocks: Optional[Sequence[tuple[int, ...]]] = None,
                 lemma_shortcut: bool = False) -> Iterator[tuple[int, ...]]:
    patterns = cls.patterns if cls is not None else ()
    if lemma_shortcut and cls is None:
        raise ValueError("the position-of-n shortcut is only valid for the two classes")
    for prefix in (blocks if blocks is not None else [()]):
        for values in _walk(n, patterns, tuple(prefix), lemma_shortcut):
            if involutions_only and any(values[v - 1] != i for i, v in enumerate(values, 1)):
                continue
            yield values


def enumerate_class(q: DistributionQuery, *, lemma_shortcut: bool = False) -> Iterator[Permutation]:
    """All permutations matching ``q``, in lexicographic order."""
    q.check_cap()
    for values in _iter_values(q.cls, q.n, involutions_only=q.involutions_only,
                               lemma_shortcut=lemma_shortcut):
        yield Permutation(values)


@lru_cache(maxsize=None)
def class_members(c: ClassId, n: int) -> tuple[tuple[int, ...], ...]:
    """Lexicographically sorted members of Av_n(c) as raw tuples (cached)."""
    return tuple(_iter_values(c, n))


def _shard_counts(cls, n, involutions_only, blocks) -> Counter:
    return Counter(stat_tuple(v) for v in _iter_values(cls, n, involutions_only=involutions_only,
                                                       blocks=blocks))


def _to_poly(counts: Counter) -> MultiPoly:
    return MultiPoly(counts)


@lru_cache(maxsize=64)
def _cached_distribution(cls, n, involutions_only) -> MultiPoly:
    return _to_poly(_shard_counts(cls, n, involutions_only, None))


def distribution(q: DistributionQuery, *, shards: int = 1, workers: int = 1) -> MultiPoly:
    """Sum of t^cyc u^fix x^exc y^inv over the permutations matching ``q``.

    With ``shards > 1`` the lexicographic blocks are dealt round robin into
    that many shards whose counts are summed; ``workers > 1`` runs the shards
    in a process pool. The result does not depend on either.
    """
    q.check_cap()
    if shards <= 1 and workers <= 1:
        return _cached_distribution(q.cls, q.n, q.involutions_only)
    shards = max(shards, 1)
    blocks = _blocks(q.n)
    parts = [blocks[i::shards] for i in range(shards)]
    args = [(q.cls, q.n, q.involutions_only, part) for part in parts]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_shard_counts, *zip(*args)))
    else:
        results = [_shard_counts(*a) for a in args]
    total = Counter()
    for r in results:
        total.update(r)
    return _to_poly(total)


def count_cyclic(c: ClassId, n: int) -> int:
    poly = distribution(DistributionQuery(c, n))
    return sum(coef for exp, coef in poly.items() if exp[0] == 1)


def mahonian(n: int) -> MultiPoly:
    """prod_{i=1..n} (1 + y + ... + y^{i-1}), the inversion generating polynomial of S_n."""
    out = MultiPoly.const(1)
    for i in range(1, n + 1):
        out = out * MultiPoly({(0, 0, 0, j): 1 for j in range(i)})
    return out


@dataclass(frozen=True)
class Mismatch:
    n: int
    exponent: tuple[int, int, int, int]
    series: int
    oracle: int


def crosscheck(gf_name: str, c: ClassId, max_n: int, *, shards: int = 1,
               workers: int = 1, on_row=None) -> Optional[Mismatch]:
    """Compare expansion of a built-in generating function with oracle counts.

    The oracle distribution is erased to the markers the function tracks and
    restricted to involutions for D and H. Returns the first difference, in
    order of n and then exponent vector, or None.
    """
    from .series import GF_INVOLUTIONS, GF_MARKERS, builtin_gf, erase_except, expand

    name = gf_name.upper()
    prefix = expand(builtin_gf(name), max_n)
    for n in range(1, max_n + 1):
        q = DistributionQuery(c, n, GF_INVOLUTIONS[name])
        got = erase_except(distribution(q, shards=shards, workers=workers), GF_MARKERS[name])
        want = prefix[n]
        if on_row is not None:
            on_row(n, got == want)
        if got != want:
            for exp in sorted(set(got.terms) | set(want.terms)):
                if got.coeff(exp) != want.coeff(exp):
                    return Mismatch(n, exp, want.coeff(exp), got.coeff(exp))
    return None
