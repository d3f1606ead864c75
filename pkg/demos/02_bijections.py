"""
The four-case maps phi and psi
==============================

Each size-n class member is built from a smaller one by appending n-1
and/or n. The delta table says how cyc, fix, exc and inv change.
"""

from permcycle import CaseTag, CaseTaggedPreimage, Permutation, stats, to_cycles
from permcycle.bijections import apply, certify, invert, stat_delta

examples = {
    "phi": [(1, "34526871"), (2, "34526871"), (3, "2456317"), (4, "3241675")],
    "psi": [(1, "34125786"), (2, "34125786"), (3, "2451673"), (4, "2134756")],
}
for name, cases in examples.items():
    for tag, word in cases:
        e = CaseTaggedPreimage(CaseTag(tag), Permutation.parse(word), 9)
        img = apply(name, e)
        print(f"{name} {e.tag.name}: {word} {to_cycles(word)} -> {img} {to_cycles(img)}"
              f"  delta={tuple(stat_delta(name, e))}")
        assert invert(name, img) == e
        assert tuple(stats(img) - stats(word)) == tuple(stat_delta(name, e))

# exhaustive certification; each line is one size
for name in ("phi", "psi"):
    for n in range(4, 9):
        print(certify(name, n).line())
