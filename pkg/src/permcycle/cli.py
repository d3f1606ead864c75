"""Command line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 environment or resource error. Data goes to stdout, reports to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bijections, oracle, series
from .patterns import ClassId, parse_class
from .series import MARKERS, GF_NAMES, MultiPoly, erase_except

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_ENV = 0, 1, 2, 3

STAT_MARKER = {"cyc": "t", "fix": "u", "exc": "x", "inv": "y"}
MARKER_COLUMN = {"t": "k", "u": "m", "x": "l", "y": "j"}

OEIS_SOURCES = ("cyclic-312-4321", "cyclic-321-4123", "totals", "tribonacci")
SHIFTS = range(-3, 4)


class UsageError(Exception):
    pass


def _class_arg(text: str) -> ClassId:
    try:
        return parse_class(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _stats_arg(text: str) -> tuple[str, ...]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    bad = [s for s in names if s not in STAT_MARKER]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"unknown statistic(s) {bad}; choose from cyc,fix,exc,inv")
    markers = {STAT_MARKER[s] for s in names}
    return tuple(m for m in MARKERS if m in markers)


def _range_arg(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")


def records(rows: Sequence[tuple[int, MultiPoly]], markers: Sequence[str]) -> list[dict]:
    """Flatten (n, polynomial) pairs into output records sorted by n, then exponents."""
    idx = [MARKERS.index(m) for m in markers]
    out = []
    for n, poly in rows:
        poly = erase_except(poly, markers)
        for exp, count in poly.items():
            rec = {"n": n}
            for m, i in zip(markers, idx):
                rec[MARKER_COLUMN[m]] = exp[i]
            rec["count"] = count
            out.append(rec)
    return out


def render_records(recs: list[dict], markers: Sequence[str], fmt: str) -> str:
    columns = ["n"] + [MARKER_COLUMN[m] for m in markers] + ["count"]
    if fmt == "json":
        return json.dumps([{**r, "count": str(r["count"])} for r in recs], indent=1)
    lines = [",".join(columns)]
    lines += [",".join(str(r[c]) for c in columns) for r in recs]
    return "\n".join(lines)


def _guard(n: int, cap: Optional[int]) -> None:
    oracle.DistributionQuery(None, n, cap=cap).check_cap()


def cmd_enumerate(args) -> int:
    markers = args.stats
    poly = oracle.distribution(
        oracle.DistributionQuery(args.cls, args.n, args.involutions, cap=args.cap),
        shards=args.threads, workers=args.threads)
    print(render_records(records([(args.n, poly)], markers), markers, args.format))
    return EXIT_OK


def cmd_expand(args) -> int:
    name = args.gf
    markers = args.stats or series.GF_MARKERS[name]
    prefix = series.expand(series.builtin_gf(name), args.max_n)
    rows = [(n, prefix[n]) for n in range(1, args.max_n + 1)]
    print(render_records(records(rows, markers), markers, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    lo, hi = args.n
    if lo < 4 or hi < lo:
        raise UsageError(f"--n must be a range A..B with 4 <= A <= B, got {lo}..{hi}")
    _guard(hi, args.cap)
    for n in range(lo, hi + 1):
        rep = bijections.certify(args.bijection, n)
        print(rep.line(), file=sys.stderr)
        if not rep.ok:
            if rep.counterexample:
                print(f"counterexample: {rep.counterexample}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    _guard(args.max_n, args.cap)
    name = args.gf

    def on_row(n, same):
        print(f"{name} vs Av({args.cls}) n={n}: {'identical' if same else 'MISMATCH'}", file=sys.stderr)

    mm = oracle.crosscheck(name, args.cls, args.max_n, shards=args.threads,
                           workers=args.threads, on_row=on_row)
    if mm is None:
        print(f"{name} and Av({args.cls}) agree exactly for n=1..{args.max_n}", file=sys.stderr)
        return EXIT_OK
    exp = ", ".join(f"{MARKER_COLUMN[m]}={e}" for m, e in zip(MARKERS, mm.exponent)
                    if m in series.GF_MARKERS[name])
    print(f"first mismatch at n={mm.n}, exponents ({exp}): series={mm.series} oracle={mm.oracle}",
          file=sys.stderr)
    return EXIT_MISMATCH


def read_bfile(path: Path) -> dict[int, int]:
    """Parse an OEIS b-file ("index value" lines, '#' comments)."""
    data = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) < 2:
                raise ValueError(f"{path}:{lineno}: expected 'index value', got {line!r}")
            data[int(parts[0])] = int(parts[1])
    if not data:
        raise ValueError(f"{path}: no data lines")
    return data


def local_sequence(source: str, max_n: int) -> list[int]:
    """Terms for n = 1..max_n."""
    if source == "cyclic-312-4321":
        return series.cyclic_sequence(ClassId.Class312_4321, max_n)
    if source == "cyclic-321-4123":
        return series.cyclic_sequence(ClassId.Class321_4123, max_n)
    gf = "A" if source == "totals" else "D"
    prefix = series.expand(series.builtin_gf(gf), max_n)
    return series.totals(prefix[1:])


def find_shift(local: Sequence[int], bfile: dict[int, int]) -> Optional[int]:
    """Smallest |shift| in -3..3 with local[n-1] == bfile[n + shift] for all n."""
    for s in sorted(SHIFTS, key=lambda s: (abs(s), s)):
        if all(bfile.get(n + s) == v for n, v in enumerate(local, 1)):
            return s
    return None


def cmd_oeis(args) -> int:
    try:
        bfile = read_bfile(args.bfile)
    except (OSError, ValueError) as exc:
        print(f"cannot read b-file: {exc}", file=sys.stderr)
        return EXIT_ENV
    local = local_sequence(args.source, args.max_n)
    shift = find_shift(local, bfile)
    if shift is None:
        print(f"{args.source} {local} does not match {args.bfile} at any shift in -3..3",
              file=sys.stderr)
        return EXIT_MISMATCH
    print(f"{args.source} n=1..{args.max_n} matches {args.bfile} at shift {shift:+d} "
          f"(local n -> b-file index n{shift:+d})", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permcycle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--cap", type=int, default=None,
                       help="size cap override (default: $PERMCYCLE_MAX_N or 11)")

    def add_format(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("enumerate", help="oracle distribution of statistics")
    p.add_argument("--class", dest="cls", type=_class_arg, default=None,
                   help="312,4321 or 321,4123 (default: all of S_n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", type=_stats_arg, default=MARKERS, help="e.g. cyc,fix,exc,inv")
    p.add_argument("--involutions", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    add_format(p)
    add_cap(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("expand", help="expand a built-in generating function")
    p.add_argument("--gf", choices=GF_NAMES, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--stats", type=_stats_arg, default=None)
    add_format(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="certify phi or psi exhaustively")
    p.add_argument("--bijection", choices=("phi", "psi"), required=True)
    p.add_argument("--n", type=_range_arg, required=True, help="A..B with A >= 4")
    add_cap(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crosscheck", help="compare a generating function with the oracle")
    p.add_argument("--gf", choices=GF_NAMES, required=True)
    p.add_argument("--class", dest="cls", type=_class_arg, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    add_cap(p)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("oeis", help="compare a computed sequence with an OEIS b-file")
    p.add_argument("--bfile", type=Path, required=True)
    p.add_argument("--source", choices=OEIS_SOURCES, required=True)
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except oracle.ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ENV


if __name__ == "__main__":
    sys.exit(main())
