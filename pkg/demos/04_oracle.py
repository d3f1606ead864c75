"""
Brute-force oracle
==================

Exhaustive enumeration of the classes, exact comparison with every
generating function, and the joint (cyc, fix, exc, inv) distribution for
which no closed form is given.
"""

import time

from permcycle import ClassId, DistributionQuery, distribution
from permcycle.oracle import crosscheck
from permcycle.series import GF_CLASS, GF_NAMES

for name in GF_NAMES:
    start = time.perf_counter()
    mm = crosscheck(name, ClassId(GF_CLASS[name]), 9)
    print(f"{name}: {'agrees' if mm is None else mm} for n <= 9 ({time.perf_counter() - start:.1f}s)")

joint = distribution(DistributionQuery(ClassId.Class312_4321, 6))
print(f"{len(joint)} distinct (cyc, fix, exc, inv) vectors at n=6, total {joint.evaluate()}")
for (cyc, fix, exc, inv), count in joint.items()[:10]:
    print(f"  cyc={cyc} fix={fix} exc={exc} inv={inv}: {count}")
