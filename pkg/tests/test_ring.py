from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resloc.errors import RingMismatch
from resloc.ring import CohClass, Ring, as_fraction

R1 = Ring(("H",), (3,))
R2 = Ring(("h", "z"), (4, 3))


def test_as_fraction():
    assert as_fraction(3) == Fraction(3)
    assert as_fraction(Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_ring_basics():
    assert R1.zero_exp == (0,)
    assert R1.top_exp == (2,)
    assert R1.nilpotency_bound == 3
    assert R2.top_exp == (3, 2)
    assert R2.nilpotency_bound == 6
    assert R2.admits((3, 2))
    assert not R2.admits((4, 0))
    assert not R2.admits((0, 0, 0))
    assert R1 == Ring(("H",), (3,))
    assert R1 != R2
    assert hash(R1) == hash(Ring(("H",), (3,)))


def test_ring_immutable():
    with pytest.raises(AttributeError):
        R1.gens = ("X",)


def test_monomial_and_generator():
    h = R1.generator("H")
    assert h.coeffs == {(1,): Fraction(1)}
    assert R1.monomial((2,), Fraction(1, 3)).coeff((2,)) == Fraction(1, 3)
    # exponents at or past the truncation silently give the zero class
    assert R1.monomial((3,)).is_zero()
    with pytest.raises(ValueError):
        R1.monomial((-1,))
    with pytest.raises(ValueError):
        R1.monomial((0, 0))
    with pytest.raises(KeyError):
        R1.generator("X")


def test_truncation_in_products():
    h = R1.generator("H")
    assert (h * h * h).is_zero()
    assert (h * h).coeff((2,)) == 1
    z = R2.generator("z")
    assert (z ** 3).is_zero()
    assert not (z ** 2).is_zero()


def test_arithmetic_coercion():
    h = R1.generator("H")
    e = 2 * h + 1
    assert e.coeff((0,)) == 1
    assert e.coeff((1,)) == 2
    assert e == h * 2 + 1
    assert 1 - h == -(h - 1)
    assert (e - 1 - h * 2).is_zero()
    assert (e * Fraction(1, 2)).coeff((1,)) == 1
    assert (e / 2).coeff((1,)) == 1
    with pytest.raises(ZeroDivisionError):
        e / 0


def test_scalar_part_and_degree():
    h = R1.generator("H")
    assert (h + 2).scalar_part == 2
    assert h.scalar_part == 0
    assert h.homogeneous_degree() == 1
    assert (h * h).homogeneous_degree() == 2
    assert (h + 1).homogeneous_degree() is None
    assert R1.zero().homogeneous_degree() is None
    assert R1.one().homogeneous_degree() == 0


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        R1.generator("H") + R2.generator("h")
    with pytest.raises(RingMismatch):
        R1.generator("H") * R2.generator("h")


def test_pow():
    h = R2.generator("h")
    z = R2.generator("z")
    e = h + z
    assert e ** 0 == R2.one()
    assert e ** 1 == e
    assert (e ** 2).coeff((1, 1)) == 2
    with pytest.raises(ValueError):
        e ** -1


coeff_st = st.fractions(min_value=-30, max_value=30, max_denominator=7)


def classes(ring):
    exps = st.tuples(*[st.integers(0, t - 1) for t in ring.truncs])
    return st.dictionaries(exps, coeff_st, max_size=4).map(
        lambda d: CohClass(ring, {e: c for e, c in d.items() if c}))


@settings(max_examples=60, deadline=None)
@given(classes(R2), classes(R2), classes(R2))
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + R2.zero() == a
    assert a * R2.one() == a
    assert (a - a).is_zero()


@settings(max_examples=60, deadline=None)
@given(classes(R2), classes(R2))
def test_quotient_consistency(a, b):
    # multiplying then reading a coefficient agrees with convolution by hand
    prod = a * b
    for exps in prod.coeffs:
        total = Fraction(0)
        for e1, c1 in a.coeffs.items():
            e2 = tuple(x - y for x, y in zip(exps, e1))
            if all(v >= 0 for v in e2):
                total += c1 * b.coeff(e2)
        assert prod.coeff(exps) == total
