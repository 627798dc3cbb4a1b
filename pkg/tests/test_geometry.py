from fractions import Fraction

import pytest

from resloc.errors import RingMismatch
from resloc.geometry import (RingSpec, integrate, laurent_from_fraction_dict,
                             pushforward_hypersurface,
                             pushforward_hypersurface_laurent)
from resloc.laurent import LaurentClass


def test_projective_spec():
    spec = RingSpec.projective(3)
    assert spec.dim == 3
    assert spec.nvars == 1
    assert spec.ring.truncs == (4,)
    assert spec.c1_degrees == (4,)
    assert spec.chern_degree((2,)) == 8
    with pytest.raises(ValueError):
        RingSpec.projective(-1)


def test_point_target_allowed():
    pt = RingSpec.projective(0)
    assert pt.dim == 0
    assert integrate(pt.ring.one()) == 1


def test_hypersurface_spec():
    spec = RingSpec.hypersurface(4, 5)
    assert spec.dim == 3
    assert spec.ring.truncs == (4,)
    assert spec.ring.norm == 5
    assert spec.c1_degrees == (0,)
    cubic = RingSpec.hypersurface(3, 3)
    assert cubic.c1_degrees == (1,)
    with pytest.raises(ValueError):
        RingSpec.hypersurface(1, 1)
    with pytest.raises(ValueError):
        RingSpec.hypersurface(3, 5)


def test_product_spec():
    spec = RingSpec.product([RingSpec.projective(1), RingSpec.projective(2)])
    assert spec.dim == 3
    assert spec.nvars == 2
    assert spec.ring.gens == ("H1", "H2")
    assert spec.ring.truncs == (2, 3)
    assert spec.c1_degrees == (2, 3)
    assert spec.chern_degree((1, 1)) == 5
    with pytest.raises(ValueError):
        RingSpec.product([spec, RingSpec.projective(1)])


def test_integrate():
    spec = RingSpec.projective(2)
    h = spec.ring.generator("H")
    assert integrate(h * h) == 1
    assert integrate(h) == 0
    x = RingSpec.hypersurface(4, 5)
    hx = x.ring.generator("H")
    assert integrate(hx ** 3) == 5


def test_monomials_order():
    spec = RingSpec.product([RingSpec.projective(1), RingSpec.projective(1)])
    assert spec.monomials() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert RingSpec.projective(2).monomials() == [(0,), (1,), (2,)]


def test_pushforward_values():
    x = RingSpec.hypersurface(4, 5)
    h = x.ring.generator("H")
    pushed = pushforward_hypersurface(h, x)
    amb = RingSpec.projective(4)
    assert pushed == amb.ring.monomial((2,), 5)
    with pytest.raises(RingMismatch):
        pushforward_hypersurface(amb.ring.generator("H"), x)


@pytest.mark.parametrize("n", range(2, 9))
def test_projection_formula(n):
    # integral over X of x * (restriction of H^b) equals the ambient integral
    # of push(x) * H^b, for every basis monomial pair
    for l in range(1, n + 2):
        x = RingSpec.hypersurface(n, l)
        amb = RingSpec.projective(n)
        for a in range(n):
            xa = x.ring.monomial((a,), 1)
            for b in range(n + 1):
                lhs = integrate(xa * x.ring.monomial((b,), 1))
                hb = amb.ring.monomial((b,), 1)
                rhs = integrate(pushforward_hypersurface(xa, x) * hb)
                assert lhs == rhs, (n, l, a, b)


def test_pushforward_laurent():
    x = RingSpec.hypersurface(3, 2)
    lc = LaurentClass(x.ring, {-2: x.ring.generator("H")})
    pushed = pushforward_hypersurface_laurent(lc, x)
    amb = RingSpec.projective(3)
    assert pushed.coeff((2,), -2) == 2


def test_embed_product():
    p1 = RingSpec.projective(1)
    spec = RingSpec.product([p1, p1])
    c = spec.embed(1, p1.ring.generator("H"))
    assert c == spec.ring.monomial((0, 1), 1)
    lc = spec.embed_laurent(0, LaurentClass(p1.ring, {-1: p1.ring.generator("H")}))
    assert lc.coeff((1, 0), -1) == 1


def test_json_round_trip():
    for spec in (RingSpec.projective(4), RingSpec.hypersurface(4, 5),
                 RingSpec.product([RingSpec.projective(1),
                                   RingSpec.projective(2)])):
        again = RingSpec.from_json(spec.to_json())
        assert again == spec
        assert again.ring == spec.ring


def test_laurent_from_fraction_dict():
    spec = RingSpec.projective(1)
    lc = laurent_from_fraction_dict(spec.ring,
                                    {-2: {(0,): Fraction(1)},
                                     -3: {(1,): Fraction(-2), (0,): Fraction(0)}})
    assert lc.coeff((0,), -2) == 1
    assert lc.coeff((1,), -3) == -2
    assert lc.coefficient(-3).coeff((0,)) == 0
