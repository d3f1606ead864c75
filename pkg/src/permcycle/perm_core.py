"""Permutations in one-line and cycle notation, and the statistics
cyc, fix, exc and inv.

All public functions use 1-based semantics: ``p.values[i - 1] == p(i)``.

>>> p = Permutation.parse("31642875")
>>> to_cycles(p)
CycleDecomposition(cycles=((1, 3, 6, 8, 5, 2), (4,), (7,)))
>>> stats(p)
StatVector(cyc=3, fix=2, exc=3, inv=9)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union

__all__ = [
    "Permutation", "CycleDecomposition", "StatVector", "MalformedCyclesError",
    "PermLike", "as_perm", "identity", "to_cycles", "from_cycles", "stats",
    "is_involution", "render", "cycle_type_counts",
]


class MalformedCyclesError(ValueError):
    """Raised when a list of cycles does not partition {1, ..., n}."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values}")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"31642875"`` (digit string) or ``"3 1 10 2 ..."`` (whitespace/comma separated)."""
        text = text.strip()
        if any(ch in text for ch in " ,\t"):
            return cls(tuple(int(tok) for tok in text.replace(",", " ").split()))
        return cls(tuple(int(ch) for ch in text))

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.values[i - 1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return render(self.values)


PermLike = Union[Permutation, str, Sequence[int]]


def as_perm(p: PermLike) -> Permutation:
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return Permutation.parse(p)
    return Permutation(tuple(p))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def render(values: Sequence[int]) -> str:
    """One-line rendering: digits concatenated for n <= 9, space separated otherwise."""
    if len(values) <= 9:
        return "".join(str(v) for v in values)
    return " ".join(str(v) for v in values)


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical cycle form: each cycle starts at its minimum, cycles ordered by minimum."""

    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __str__(self) -> str:
        n = sum(len(c) for c in self.cycles)
        sep = "" if n <= 9 else " "
        return "".join("(" + sep.join(str(v) for v in c) + ")" for c in self.cycles)


class StatVector(NamedTuple):
    cyc: int
    fix: int
    exc: int
    inv: int

    def __sub__(self, other):
        return tuple(a - b for a, b in zip(self, other))


def _cycles_of(values: Sequence[int]) -> list[tuple[int, ...]]:
    # scanning i in increasing order makes every cycle start at its minimum
    n = len(values)
    seen = [False] * (n + 1)
    out = []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        cycle = []
        j = i
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = values[j - 1]
        out.append(tuple(cycle))
    return out


def to_cycles(p: PermLike) -> CycleDecomposition:
    return CycleDecomposition(tuple(_cycles_of(as_perm(p).values)))


def from_cycles(c: Union[CycleDecomposition, Iterable[Sequence[int]]], n: int) -> Permutation:
    """Inverse of :func:`to_cycles`. Cycles may be given in any rotation and order."""
    cycles = c.cycles if isinstance(c, CycleDecomposition) else [tuple(cy) for cy in c]
    values = [0] * n
    for cycle in cycles:
        if not cycle:
            raise MalformedCyclesError("empty cycle")
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if not 1 <= a <= n or values[a - 1]:
                raise MalformedCyclesError(f"element {a} out of range or repeated")
            values[a - 1] = b
    if 0 in values:
        missing = [i + 1 for i, v in enumerate(values) if v == 0]
        raise MalformedCyclesError(f"elements missing from cycles: {missing}")
    return Permutation(tuple(values))


def count_cycles(values: Sequence[int]) -> int:
    n = len(values)
    seen = bytearray(n + 1)
    count = 0
    for i in range(1, n + 1):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = values[j - 1]
    return count


def count_inversions(values: Sequence[int]) -> int:
    n = len(values)
    return sum(1 for i in range(n) for j in range(i + 1, n) if values[i] > values[j])


def stat_tuple(values: Sequence[int]) -> tuple[int, int, int, int]:
    """(cyc, fix, exc, inv) of a raw one-line tuple; the hot path for the oracle."""
    fix = exc = 0
    for i, v in enumerate(values, 1):
        if v == i:
            fix += 1
        elif v > i:
            exc += 1
    return count_cycles(values), fix, exc, count_inversions(values)


def stats(p: PermLike) -> StatVector:
    return StatVector(*stat_tuple(as_perm(p).values))


def is_involution(p: PermLike) -> bool:
    values = as_perm(p).values
    return all(values[v - 1] == i for i, v in enumerate(values, 1))


def cycle_type_counts(p: PermLike) -> dict[int, int]:
    """Map cycle length -> number of cycles of that length."""
    counts: dict[int, int] = {}
    for cycle in to_cycles(p):
        counts[len(cycle)] = counts.get(len(cycle), 0) + 1
    return counts
