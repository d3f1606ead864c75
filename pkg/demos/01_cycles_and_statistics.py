"""
Cycles, statistics and pattern avoidance
========================================

One-line and cycle notation, the four statistics, and membership in the
two classes.
"""

from permcycle import ClassId, Permutation, in_class, occurrences, stats, to_cycles

p = Permutation.parse("31642875")
print(p, "=", to_cycles(p))
print(stats(p))

# occurrences are 1-based index tuples in lexicographic order
q = Permutation.parse("31562487")
for idx in occurrences(q, "312")[:5]:
    print(idx, [q(i) for i in idx])

for word in ("34526871", "2451673", "312"):
    print(word, {c.value: in_class(word, c) for c in ClassId})
