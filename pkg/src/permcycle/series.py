"""Exact multivariate polynomials in the markers t, u, x, y and rational
generating functions in z whose coefficients are such polynomials.

Markers: t counts cycles, u fixed points, x excedances, y inversions; the
power of z is the size of the permutation. Coefficients are Python ints, so
expansion never overflows.

>>> expand(builtin_gf("A"), 3)[3]
MultiPoly('t + 3*t^2 + t^3')
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "MARKERS", "MultiPoly", "RationalGF", "SeriesPrefix", "poly_add", "poly_mul",
    "specialize", "erase_except", "builtin_gf", "expand", "recurrence_a",
    "recurrence_f", "cyclic_sequence", "GF_NAMES", "GF_MARKERS", "GF_CLASS",
    "GF_INVOLUTIONS", "row_counts", "totals",
]

MARKERS = ("t", "u", "x", "y")
Exponent = tuple[int, int, int, int]
_ZERO_EXP: Exponent = (0, 0, 0, 0)


class MultiPoly:
    """Sparse polynomial with integer coefficients in t, u, x, y.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Sequence[int], int], Iterable[tuple[Sequence[int], int]], None] = None):
        acc: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != 4 or min(exp) < 0:
                raise ValueError(f"bad exponent vector {exp}")
            acc[exp] = acc.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        exp = [0, 0, 0, 0]
        exp[MARKERS.index(name)] = power
        return cls({tuple(exp): 1})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> "MultiPoly":
        return cls({tuple(exp): c})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    __getitem__ = coeff

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.items())

    @staticmethod
    def _coerce(other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return MultiPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                acc[e] = acc.get(e, 0) + c1 * c2
        return MultiPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, **values: int) -> int:
        """Evaluate at integer marker values; unspecified markers default to 1."""
        vals = [values.get(m, 1) for m in MARKERS]
        return sum(c * vals[0] ** e[0] * vals[1] ** e[1] * vals[2] ** e[2] * vals[3] ** e[3]
                   for e, c in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        # terms sorted by exponent vector (t, u, x, y)
        parts = []
        for e, c in sorted(self._terms.items()):
            mono = "*".join(m if k == 1 else f"{m}^{k}" for m, k in zip(MARKERS, e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"MultiPoly('{self}')"


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def specialize(p: MultiPoly, assignments: Union[Mapping[str, int], Iterable[str]]) -> MultiPoly:
    """Set the given markers to 1, summing coefficients over their exponents."""
    if isinstance(assignments, Mapping):
        for name, value in assignments.items():
            if value != 1:
                raise ValueError(f"only marker erasure (value 1) is supported, got {name}={value}")
        names = list(assignments)
    else:
        names = list(assignments)
    idx = [MARKERS.index(name) for name in names]
    acc: dict[Exponent, int] = {}
    for e, c in p._terms.items():
        e = tuple(0 if i in idx else k for i, k in enumerate(e))
        acc[e] = acc.get(e, 0) + c
    return MultiPoly(acc)


def erase_except(p: MultiPoly, keep: Iterable[str]) -> MultiPoly:
    keep = set(keep)
    return specialize(p, [m for m in MARKERS if m not in keep])


def totals(prefix: Sequence[MultiPoly]) -> list[int]:
    return [p.evaluate() for p in prefix]


@dataclass(frozen=True)
class RationalGF:
    """numerator / denominator, each a list of z-power coefficients."""

    numerator: tuple[MultiPoly, ...]
    denominator: tuple[MultiPoly, ...]
    name: str = ""

    def __post_init__(self):
        num = tuple(self.numerator)
        den = tuple(self.denominator)
        if not den or not den[0]:
            raise ValueError("denominator must have a nonzero constant z^0 term")
        d0 = den[0]
        if d0 != 1:
            if d0 == -1:
                num = tuple(-c for c in num)
                den = tuple(-c for c in den)
            else:
                raise ValueError(f"z^0 term of denominator must be +-1, got {d0}")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)


class SeriesPrefix(tuple):
    """Coefficients of z^0 .. z^N, each a MultiPoly."""

    @property
    def N(self) -> int:
        return len(self) - 1

    @property
    def coeffs(self) -> tuple[MultiPoly, ...]:
        return tuple(self)


def expand(gf: RationalGF, N: int) -> SeriesPrefix:
    """First N+1 coefficients of num/den via c_n = num_n - sum_{i>=1} den_i c_{n-i}."""
    num, den = gf.numerator, gf.denominator
    zero = MultiPoly()
    out: list[MultiPoly] = []
    for n in range(N + 1):
        c = num[n] if n < len(num) else zero
        for i in range(1, min(n, len(den) - 1) + 1):
            if den[i]:
                c = c - den[i] * out[n - i]
        out.append(c)
    return SeriesPrefix(out)


_t, _u, _x, _y = (MultiPoly.var(m) for m in MARKERS)
_one = MultiPoly.const(1)


def _zlist(coeffs: Mapping[int, MultiPoly | int]) -> tuple[MultiPoly, ...]:
    top = max(coeffs)
    return tuple(MultiPoly._coerce(coeffs.get(i, 0)) for i in range(top + 1))


def _build(name: str) -> RationalGF:
    t, u, x, y = _t, _u, _x, _y
    if name == "A":
        num = {1: t, 3: -t}
        den = {0: 1, 1: -(1 + t), 2: -(1 + t), 3: t}
    elif name == "B":
        num = {1: t, 3: -t * x**2 * y**4}
        den = {0: 1, 1: -(x * y + t), 2: -x * y**3 * (t + x * y),
               3: -x**2 * y**4 * (y - t - x * y)}
    elif name == "C":
        num = {1: t * u, 2: t * (1 - u), 3: t * u * (t - t * u - 1), 5: t**2 * (1 - u)**2}
        den = {0: 1, 1: -(1 + t * u), 2: -(1 + t), 3: t * u * (1 + t * u - t),
               4: t * (u - 1), 5: -t**2 * (1 - u)**2}
    elif name == "D":
        num = {1: t * u, 2: t * x * y, 3: t**2 * u * x * y**3}
        den = {0: 1, 1: -u * t, 2: -t * x * y, 3: -t**2 * u * x * y**3}
    elif name == "F":
        num = {1: t, 3: -t}
        den = {0: 1, 1: -(1 + t), 2: -2, 3: 1}
    elif name == "G":
        g2 = x * y * (t * (u - 1) - y - x * y**3)
        g3 = x * y**2 * (u * t - t + x * y**2 * (u * t + x * y - t))
        g4 = t * x**2 * y**4 * (x * y - t) * (1 - u)
        num = {1: t * u, 2: t * x * y * (1 - u), 3: t * x * y**2 * (1 - u * x * y**2 - u),
               4: t * x**2 * y**4 * (x * y - t) * (u - 1)}
        den = {0: 1, 1: -(x * y + t * u), 2: g2, 3: g3, 4: g4}
    elif name == "H":
        num = {1: t * u, 2: t * x * y, 4: t**2 * x**2 * y**4}
        den = {0: 1, 1: -t * u, 2: -t * x * y, 4: -t**2 * x**2 * y**4}
    else:
        raise KeyError(f"unknown generating function {name!r}; expected one of {GF_NAMES}")
    return RationalGF(_zlist(num), _zlist(den), name)


GF_NAMES = ("A", "B", "C", "D", "F", "G", "H")

# markers each function tracks; the rest are erased when comparing with counts
GF_MARKERS = {
    "A": ("t",), "B": ("t", "x", "y"), "C": ("t", "u"), "D": MARKERS,
    "F": ("t",), "G": MARKERS, "H": MARKERS,
}
GF_CLASS = {"A": "312,4321", "B": "312,4321", "C": "312,4321", "D": "312,4321",
            "F": "321,4123", "G": "321,4123", "H": "321,4123"}
GF_INVOLUTIONS = {name: name in ("D", "H") for name in GF_NAMES}


def builtin_gf(name: str) -> RationalGF:
    return _build(name.upper() if isinstance(name, str) else name)


def row_counts(p: MultiPoly, n: int) -> tuple[int, ...]:
    """Coefficients of t^1 .. t^n of a polynomial in t alone."""
    p = erase_except(p, "t")
    return tuple(p.coeff((k, 0, 0, 0)) for k in range(1, n + 1))


def _oracle_rows(class_id: str, upto: int) -> dict[int, list[int]]:
    from .oracle import DistributionQuery, distribution
    from .patterns import parse_class
    c = parse_class(class_id)
    rows = {}
    for n in range(1, upto + 1):
        poly = distribution(DistributionQuery(c, n))
        rows[n] = [0] + list(row_counts(poly, n))
    return rows


def _run_recurrence(class_id: str, N: int, step) -> dict[int, tuple[int, ...]]:
    if N < 1:
        raise ValueError("N must be >= 1")
    rows = _oracle_rows(class_id, min(N, 3))
    for n in range(4, N + 1):
        def at(m: int, k: int) -> int:
            r = rows[m]
            return r[k] if 0 <= k < len(r) else 0
        rows[n] = [0] + [step(at, n, k) for k in range(1, n + 1)]
    return {n: tuple(r[1:]) for n, r in rows.items()}


def recurrence_a(N: int) -> dict[int, tuple[int, ...]]:
    """a_n(k) for 1 <= n <= N, keyed by n; row n lists k = 1..n."""
    return _run_recurrence(
        "312,4321", N,
        lambda a, n, k: a(n - 1, k) + a(n - 1, k - 1) + a(n - 2, k - 1) + a(n - 2, k) - a(n - 3, k - 1))


def recurrence_f(N: int) -> dict[int, tuple[int, ...]]:
    """f_n(k) for 1 <= n <= N, keyed by n; row n lists k = 1..n."""
    return _run_recurrence(
        "321,4123", N,
        lambda f, n, k: f(n - 1, k) + f(n - 1, k - 1) + 2 * f(n - 2, k) - f(n - 3, k))


def cyclic_sequence(c, N: int) -> list[int]:
    """Number of cyclic class members of size n, for n = 1..N."""
    from .patterns import ClassId, parse_class
    c = c if isinstance(c, ClassId) else parse_class(c)
    gf = builtin_gf("A" if c is ClassId.Class312_4321 else "F")
    prefix = expand(gf, N)
    return [erase_except(prefix[n], "t").coeff((1, 0, 0, 0)) for n in range(1, N + 1)]
