"""Cycle and statistic enumeration for the permutation classes
Av(312, 4321) and Av(321, 4123)."""

from .perm_core import (
    CycleDecomposition, MalformedCyclesError, Permutation, StatVector, as_perm,
    from_cycles, identity, is_involution, stats, to_cycles,
)
from .patterns import (
    ClassId, PreconditionError, contains, in_class, in_restricted,
    max_position_check, occurrences, parse_class,
)
from .bijections import (
    CaseTag, CaseTaggedPreimage, DomainError, StatDelta, apply_via_cycles,
    build_multiset, phi_apply, phi_invert, psi_apply, psi_invert, stat_delta,
)
from .series import (
    MultiPoly, RationalGF, SeriesPrefix, builtin_gf, cyclic_sequence, expand,
    poly_add, poly_mul, recurrence_a, recurrence_f, specialize,
)
from .oracle import (
    DistributionQuery, ResourceGuardError, count_cyclic, distribution,
    enumerate_class,
)

__version__ = "0.1.0"
