"""The four-case maps phi (onto Av_n(312,4321)) and psi (onto Av_n(321,4123)).

Both maps take an element of a multiset

    M_n = Av_{n-1} + Av_{n-1} + Av_{n-2} + R_{n-2}

tagged with the part it came from, and append the values n-1 and/or n near
the end of its one-line notation. ``R`` is S' for phi (last entry not fixed)
and S'' for psi (value m not in position m-1). The maps are defined for
n >= 4 only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .patterns import ClassId, in_class_values, restricted_values
from .perm_core import Permutation, PermLike, as_perm, from_cycles, to_cycles

__all__ = [
    "CaseTag", "CaseTaggedPreimage", "StatDelta", "DomainError", "MapName",
    "phi_apply", "phi_invert", "psi_apply", "psi_invert", "apply", "invert",
    "build_multiset", "stat_delta", "apply_via_cycles", "MAP_CLASS",
    "CertReport", "certify",
]


class DomainError(ValueError):
    """Input outside the domain of phi / psi."""


class CaseTag(enum.IntEnum):
    Case1 = 1
    Case2 = 2
    Case3 = 3
    Case4 = 4


class MapName(str, enum.Enum):
    phi = "phi"
    psi = "psi"


MAP_CLASS = {MapName.phi: ClassId.Class312_4321, MapName.psi: ClassId.Class321_4123}
CLASS_MAP = {c: m for m, c in MAP_CLASS.items()}


@dataclass(frozen=True)
class CaseTaggedPreimage:
    tag: CaseTag
    perm: Permutation
    target_size: int

    def __str__(self):
        return f"({self.tag.name}, {self.perm})"


class StatDelta(NamedTuple):
    d_cyc: int
    d_fix: int
    d_exc: int
    d_inv: int


def _source_size(tag: CaseTag, n: int) -> int:
    return n - 1 if tag <= CaseTag.Case2 else n - 2


def _check_preimage(e: CaseTaggedPreimage, c: ClassId) -> None:
    n = e.target_size
    if n < 4:
        raise DomainError(f"maps are defined for n >= 4, got n={n}")
    values = e.perm.values
    if len(values) != _source_size(e.tag, n):
        raise DomainError(f"{e.tag.name} needs a permutation of size {_source_size(e.tag, n)}, got {len(values)}")
    if e.tag is CaseTag.Case4:
        ok = restricted_values(values, c)
    else:
        ok = in_class_values(values, c)
    if not ok:
        raise DomainError(f"{e.perm} is not a valid {e.tag.name} preimage for Av({c})")


# Raw tuple versions; no validation.

def _phi(tag: int, p: Sequence[int], n: int) -> tuple[int, ...]:
    p = tuple(p)
    if tag == 1:
        return p[:-1] + (n, p[-1])
    if tag == 2:
        return p + (n,)
    if tag == 3:
        return p[:-1] + (n, n - 1, p[-1])
    return p[:-2] + (n - 1, n) + p[-2:]


def _psi(tag: int, p: Sequence[int], n: int) -> tuple[int, ...]:
    if tag == 3:
        p = tuple(p)
        return p[:-1] + (n, p[-1], n - 1)
    return _phi(tag, p, n)


def _phi_inv(t: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    n = len(t)
    t = tuple(t)
    if t[n - 1] == n:
        return 2, t[:-1]
    if t[n - 2] == n:
        return 1, t[:-2] + (t[-1],)
    if t[n - 3] == n and t[n - 2] == n - 1:
        return 3, t[:-3] + (t[-1],)
    if t[n - 3] == n and t[n - 4] == n - 1:
        return 4, t[:-4] + t[-2:]
    return None


def _psi_inv(t: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    n = len(t)
    t = tuple(t)
    if t[n - 1] == n:
        return 2, t[:-1]
    if t[n - 2] == n:
        return 1, t[:-2] + (t[-1],)
    if t[n - 3] == n and t[n - 1] == n - 1:
        return 3, t[:-3] + (t[-2],)
    if t[n - 3] == n and t[n - 4] == n - 1:
        return 4, t[:-4] + t[-2:]
    return None


_RAW = {MapName.phi: (_phi, _phi_inv), MapName.psi: (_psi, _psi_inv)}


def apply(map_name: MapName | str, e: CaseTaggedPreimage) -> Permutation:
    m = MapName(map_name)
    _check_preimage(e, MAP_CLASS[m])
    forward = _RAW[m][0]
    return Permutation(forward(int(e.tag), e.perm.values, e.target_size))


def invert(map_name: MapName | str, p: PermLike) -> CaseTaggedPreimage:
    m = MapName(map_name)
    c = MAP_CLASS[m]
    p = as_perm(p)
    if p.n < 4:
        raise DomainError(f"maps are defined for n >= 4, got n={p.n}")
    if not in_class_values(p.values, c):
        raise DomainError(f"{p} is not in Av({c})")
    found = _RAW[m][1](p.values)
    if found is None:  # unreachable for class members
        raise DomainError(f"no case matches {p}")
    tag, pre = found
    return CaseTaggedPreimage(CaseTag(tag), Permutation(pre), p.n)


def phi_apply(e: CaseTaggedPreimage) -> Permutation:
    """Image of a tagged preimage under phi.

    >>> e = CaseTaggedPreimage(CaseTag.Case3, Permutation.parse("2456317"), 9)
    >>> str(phi_apply(e))
    '245631987'
    """
    return apply(MapName.phi, e)


def phi_invert(p: PermLike) -> CaseTaggedPreimage:
    return invert(MapName.phi, p)


def psi_apply(e: CaseTaggedPreimage) -> Permutation:
    return apply(MapName.psi, e)


def psi_invert(p: PermLike) -> CaseTaggedPreimage:
    return invert(MapName.psi, p)


def build_multiset(c: ClassId, n: int, members=None) -> list[CaseTaggedPreimage]:
    """The tagged disjoint union M_n for class ``c``.

    Order: Case1 block, Case2, Case3, Case4, each lexicographic. ``members``
    may map a size to the lexicographically sorted list of class members of
    that size (as tuples); by default they come from the oracle.
    """
    if n < 4:
        raise DomainError(f"M_n is defined here for n >= 4, got n={n}")
    if members is None:
        from .oracle import class_members
        members = {m: class_members(c, m) for m in (n - 1, n - 2)}
    big = members[n - 1]
    small = members[n - 2]
    restricted = [p for p in small if restricted_values(p, c)]
    out = []
    for tag, block in ((CaseTag.Case1, big), (CaseTag.Case2, big),
                       (CaseTag.Case3, small), (CaseTag.Case4, restricted)):
        out.extend(CaseTaggedPreimage(tag, Permutation(p), n) for p in block)
    return out


def _delta_raw(map_name: MapName, tag: int, p: Sequence[int]) -> StatDelta:
    m = len(p)
    last_fixed = p[m - 1] == m
    if tag == 2:
        return StatDelta(1, 1, 0, 0)
    if tag == 1:
        return StatDelta(0, -last_fixed, 1, 1)
    if tag == 3:
        if map_name is MapName.phi:
            # n-1 becomes a new fixed point, m may stop being one
            return StatDelta(1, 1 - last_fixed, 1, 3)
        # m -> n -> n-1 -> p(m): one cycle is lengthened by two
        return StatDelta(0, -last_fixed, 1, 2)
    # Case4: m-1 -> n-1 -> p(m-1) and m -> n -> p(m)
    second_last_fixed = p[m - 2] == m - 1
    was_excedance = p[m - 2] == m
    return StatDelta(0, -second_last_fixed - last_fixed, 2 - was_excedance, 4)


def stat_delta(map_name: MapName | str, e: CaseTaggedPreimage) -> StatDelta:
    """Change of (cyc, fix, exc, inv) from ``e.perm`` to its image."""
    m = MapName(map_name)
    _check_preimage(e, MAP_CLASS[m])
    return _delta_raw(m, int(e.tag), e.perm.values)


def apply_via_cycles(map_name: MapName | str, e: CaseTaggedPreimage) -> Permutation:
    """Same image as :func:`apply`, built by editing the cycle notation instead.

    Case1 puts n after n-1; Case2 adds the fixed point (n); Case4 puts n after
    n-2 and n-1 after n-3. Case3 puts n after n-2 and adds the fixed point
    (n-1) for phi, and puts n then n-1 after n-2 for psi.
    """
    m = MapName(map_name)
    n = e.target_size
    cycles = [list(c) for c in to_cycles(e.perm)]

    def insert_after(a: int, *new: int) -> None:
        for cyc in cycles:
            if a in cyc:
                i = cyc.index(a) + 1
                cyc[i:i] = list(new)
                return
        raise DomainError(f"{a} not found in cycles")

    tag = e.tag
    if tag is CaseTag.Case1:
        insert_after(n - 1, n)
    elif tag is CaseTag.Case2:
        cycles.append([n])
    elif tag is CaseTag.Case3:
        if m is MapName.phi:
            insert_after(n - 2, n)
            cycles.append([n - 1])
        else:
            insert_after(n - 2, n, n - 1)
    else:
        insert_after(n - 2, n)
        insert_after(n - 3, n - 1)
    return from_cycles(cycles, n)


@dataclass
class CertReport:
    """Outcome of checking one map exhaustively at one size."""

    map_name: str
    n: int
    multiset_size: int
    class_size: int
    image_size: int
    outside_class: int = 0
    roundtrip_failures: int = 0
    delta_violations: int = 0
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return (self.multiset_size == self.class_size == self.image_size
                and not (self.outside_class or self.roundtrip_failures or self.delta_violations))

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return (f"{self.map_name} n={self.n} multiset={self.multiset_size} class={self.class_size} "
                f"image={self.image_size} outside_class={self.outside_class} "
                f"roundtrip_failures={self.roundtrip_failures} "
                f"delta_violations={self.delta_violations} {status}")


def certify(map_name: MapName | str, n: int) -> CertReport:
    """Check bijectivity, both round trips and the delta table at size n."""
    from .oracle import class_members
    from .perm_core import render, stat_tuple

    m = MapName(map_name)
    c = MAP_CLASS[m]
    forward, backward = _RAW[m]
    members = {k: list(class_members(c, k)) for k in (n, n - 1, n - 2)}
    multiset = build_multiset(c, n, members)
    target = set(members[n])
    images = []
    rep = CertReport(m.value, n, len(multiset), len(target), 0)

    def note(msg: str) -> None:
        if rep.counterexample is None:
            rep.counterexample = msg

    for e in multiset:
        pre = e.perm.values
        img = forward(int(e.tag), pre, n)
        images.append(img)
        if img not in target:
            rep.outside_class += 1
            note(f"{e} -> {render(img)} is not in Av({c})")
        back = backward(img)
        if back != (int(e.tag), pre):
            rep.roundtrip_failures += 1
            note(f"{e} -> {render(img)} inverts to {back}")
        got = StatDelta(*(a - b for a, b in zip(stat_tuple(img), stat_tuple(pre))))
        want = _delta_raw(m, int(e.tag), pre)
        if got != want:
            rep.delta_violations += 1
            note(f"{e}: delta {tuple(got)} != table {tuple(want)}")
    rep.image_size = len(set(images))
    for p in members[n]:
        back = backward(p)
        if back is None or forward(back[0], back[1], n) != p:
            rep.roundtrip_failures += 1
            note(f"{render(p)} does not round trip through the inverse")
    return rep
