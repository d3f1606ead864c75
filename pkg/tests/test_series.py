import pytest
from hypothesis import given, strategies as st

from permcycle.patterns import ClassId
from permcycle.series import (
    GF_NAMES, MultiPoly, RationalGF, builtin_gf, cyclic_sequence, erase_except,
    expand, poly_add, poly_mul, recurrence_a, recurrence_f, row_counts,
    specialize, totals,
)

t, u, x, y = (MultiPoly.var(m) for m in "tuxy")


def tpoly(*coeffs):
    """sum coeffs[k-1] * t^k"""
    return sum((c * t**k for k, c in enumerate(coeffs, 1)), MultiPoly())


# printed expansions, coefficients of t^1.. per z^n
A_PRINTED = {1: (1,), 2: (1, 1), 3: (1, 3, 1), 4: (2, 5, 5, 1),
             5: (3, 10, 13, 7, 1), 6: (5, 19, 30, 25, 9, 1)}
F_PRINTED = {1: (1,), 2: (1, 1), 3: (2, 2, 1), 4: (3, 6, 3, 1),
             5: (6, 12, 11, 4, 1), 6: (10, 28, 28, 17, 5, 1)}


def test_arithmetic_examples():
    assert t * (t + 1) == t**2 + t
    assert (x * y + t) * 0 == MultiPoly()
    assert not ((x * y + t) * 0)
    assert poly_mul(1 + t, t + t**2) == t + 2 * t**2 + t**3
    assert poly_add(t, -t) == 0
    assert (t - 1) * (t + 1) == t**2 - 1
    assert str(3 * t**2 * u - x + 2) == "2 - x + 3*t^2*u"


def test_big_coefficients_are_exact():
    p = MultiPoly.const(2**62) * MultiPoly.const(2**62) * t
    assert p.coeff((1, 0, 0, 0)) == 2**124


polys = st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * 4), st.integers(-5, 5), max_size=5).map(MultiPoly)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)
    assert a - a == 0


@given(polys, polys)
def test_specialize_is_ring_homomorphism(a, b):
    for names in (["t"], ["u", "x"], ["t", "u", "x", "y"]):
        assert specialize(a * b, names) == specialize(a, names) * specialize(b, names)
        assert specialize(a + b, names) == specialize(a, names) + specialize(b, names)


def test_specialize_examples():
    assert specialize(t + 3 * t**2 * u + t**3 * u**3, {"u": 1}) == t + 3 * t**2 + t**3
    assert specialize(MultiPoly(), {"t": 1}) == 0
    assert specialize(t * x * y**2, {"x": 1, "y": 1}) == t
    with pytest.raises(ValueError):
        specialize(t, {"t": 2})


def test_builtin_transcriptions():
    A = builtin_gf("A")
    assert A.numerator == (0, t, 0, -t)
    assert A.denominator == (1, -(1 + t), -(1 + t), t)
    F = builtin_gf("F")
    assert F.numerator == (0, t, 0, -t)
    assert F.denominator == (1, -(1 + t), -2, 1)
    H = builtin_gf("H")
    assert H.numerator == (0, t * u, t * x * y, 0, t**2 * x**2 * y**4)
    assert H.denominator == (1, -t * u, -t * x * y, 0, -t**2 * x**2 * y**4)
    G = builtin_gf("G")
    assert G.denominator[4] == t * x**2 * y**4 * (x * y - t) * (1 - u)
    with pytest.raises(KeyError):
        builtin_gf("E")


def test_normalization():
    gf = RationalGF((MultiPoly(), t), (MultiPoly.const(-1), t))
    assert gf.denominator[0] == 1 and gf.numerator[1] == -t
    with pytest.raises(ValueError):
        RationalGF((t,), (MultiPoly.const(2),))


def test_printed_expansions():
    a = expand(builtin_gf("A"), 6)
    f = expand(builtin_gf("F"), 6)
    assert a[0] == 0 and f[0] == 0
    for n in range(1, 7):
        assert a[n] == tpoly(*A_PRINTED[n])
        assert f[n] == tpoly(*F_PRINTED[n])
    assert expand(builtin_gf("A"), 0) == (MultiPoly(),)


@pytest.mark.parametrize("name", GF_NAMES)
def test_constant_term_zero(name):
    assert expand(builtin_gf(name), 5)[0] == 0


def test_specialization_identities():
    N = 12
    A = expand(builtin_gf("A"), N)
    F = expand(builtin_gf("F"), N)
    B = expand(builtin_gf("B"), N)
    C = expand(builtin_gf("C"), N)
    G = expand(builtin_gf("G"), N)
    for n in range(N + 1):
        assert specialize(B[n], "xy") == A[n]
        assert specialize(C[n], "u") == A[n]
        assert specialize(G[n], "uxy") == F[n]


def test_totals():
    assert totals(expand(builtin_gf("A"), 8)[1:]) == [1, 2, 5, 13, 34, 89, 233, 610]
    assert totals(expand(builtin_gf("F"), 8)[1:]) == [1, 2, 5, 13, 34, 89, 233, 610]
    d = totals(expand(builtin_gf("D"), 12)[1:])
    assert d[:6] == [1, 2, 4, 7, 13, 24]
    assert all(d[i] == d[i - 1] + d[i - 2] + d[i - 3] for i in range(3, len(d)))


def test_recurrence_rows():
    a = recurrence_a(6)
    assert a[1] == (1,) and a[3] == (1, 3, 1) and a[4] == (2, 5, 5, 1)
    f = recurrence_f(6)
    assert f[1] == (1,) and f[3] == (2, 2, 1) and f[6][0] == 10


def test_recurrence_matches_expansion():
    N = 20
    for rec, name in ((recurrence_a, "A"), (recurrence_f, "F")):
        rows = rec(N)
        prefix = expand(builtin_gf(name), N)
        for n in range(1, N + 1):
            assert rows[n] == row_counts(prefix[n], n)
    with pytest.raises(ValueError):
        recurrence_a(0)


def test_cyclic_sequences():
    assert cyclic_sequence(ClassId.Class312_4321, 6) == [1, 1, 1, 2, 3, 5]
    assert cyclic_sequence(ClassId.Class321_4123, 6) == [1, 1, 2, 3, 6, 10]
    assert cyclic_sequence("321,4123", 1) == [1]
    fbar = cyclic_sequence(ClassId.Class321_4123, 25)
    for n in range(4, 26):
        assert fbar[n - 1] == fbar[n - 2] + 2 * fbar[n - 3] - fbar[n - 4]


def test_erase_except():
    p = t * u**2 * x * y**3 + 2 * t
    assert erase_except(p, "t") == 3 * t
    assert erase_except(p, ("t", "y")) == t * y**3 + 2 * t
