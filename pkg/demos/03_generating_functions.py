"""
Generating functions and recurrences
====================================

Expand the seven rational generating functions, erase markers, and
compare with the cycle recurrences.
"""

from permcycle import builtin_gf, cyclic_sequence, expand, recurrence_a, specialize
from permcycle.series import GF_NAMES, totals

A = expand(builtin_gf("A"), 6)
for n in range(1, 7):
    print(f"z^{n}: {A[n]}")

# erasing x and y from B gives back A
B = expand(builtin_gf("B"), 8)
print(all(specialize(B[n], "xy") == expand(builtin_gf("A"), 8)[n] for n in range(9)))

print("a_n(k):", recurrence_a(7)[7])
print("cyclic 312/4321:", cyclic_sequence("312,4321", 12))
print("cyclic 321/4123:", cyclic_sequence("321,4123", 12))

for name in GF_NAMES:
    print(name, totals(expand(builtin_gf(name), 10)[1:]))
