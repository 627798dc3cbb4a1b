"""J-functions, quantum Lefschetz I-functions and the mirror transformation.

The J-function of a target collects, degree by degree, the pushed-forward
residues 1/(t(t-psi)) of one-pointed stable map spaces.  For projective space
these coefficients are explicit inverse products; hypersurface data arrives
through the hypergeometric I-function and is converted to a genuine J-function
by solving for the mirror transformation order by order in q.
"""

from fractions import Fraction

from .errors import DegenerateSystem, NormalizationFailed, NotDivisible
from .fmt import laurent_from_json, laurent_to_json
from .geometry import RingSpec
from .laurent import LaurentClass, laurent_invert
from .qseries import QSeries, qs_compose, qs_exp
from .ring import CohClass


class JFunction:
    """Degree-indexed table of Laurent coefficients F_d over a target ring.

    A genuine J-function has F_0 = 1 and, for d != 0, only t-exponents <= -2;
    pushed-forward variants relax F_0 (see mirror_normalize).  The table keys
    are degree tuples with one entry per quantum variable.
    """

    __slots__ = ("ring_spec", "trunc", "coeffs")

    def __init__(self, ring_spec, trunc, coeffs):
        self.ring_spec = ring_spec
        self.trunc = int(trunc)
        self.coeffs = {tuple(d): c for d, c in coeffs.items() if not c.is_zero()}

    @property
    def nvars(self):
        return self.ring_spec.nvars

    def coefficient(self, d):
        if isinstance(d, int):
            d = (d,)
        d = tuple(d)
        return self.coeffs.get(d, LaurentClass.zero(self.ring_spec.ring))

    def degrees(self):
        return sorted(self.coeffs)

    def series(self):
        return QSeries(self.ring_spec.ring, self.nvars, self.trunc,
                       dict(self.coeffs))

    def truncate(self, new_trunc):
        if new_trunc > self.trunc:
            raise ValueError("cannot extend a truncated J-function")
        kept = {d: c for d, c in self.coeffs.items() if sum(d) <= new_trunc}
        return JFunction(self.ring_spec, new_trunc, kept)

    def check_shape(self, expected_f0=None):
        """True when F_0 matches and every d != 0 term has t-exponents <= -2."""
        ring = self.ring_spec.ring
        if expected_f0 is None:
            expected_f0 = LaurentClass.one(ring)
        zero_deg = (0,) * self.nvars
        if self.coefficient(zero_deg) != expected_f0:
            return False
        for d, c in self.coeffs.items():
            if d == zero_deg:
                continue
            if any(j > -2 for j in c.terms):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, JFunction):
            return NotImplemented
        return (self.ring_spec == other.ring_spec and self.trunc == other.trunc
                and self.coeffs == other.coeffs)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def to_json(self):
        from .fmt import fmt_tuple
        coeffs = {}
        for d in sorted(self.coeffs):
            coeffs[fmt_tuple(d)] = laurent_to_json(self.coeffs[d])
        return {"ring": self.ring_spec.to_json(), "D": self.trunc,
                "coefficients": coeffs}

    @classmethod
    def from_json(cls, data):
        from .fmt import parse_tuple
        spec = RingSpec.from_json(data["ring"])
        trunc = int(data["D"])
        coeffs = {}
        for d_str, lc_data in data["coefficients"].items():
            coeffs[parse_tuple(d_str)] = laurent_from_json(spec.ring, lc_data)
        return cls(spec, trunc, coeffs)


def j_projective(n, trunc):
    """The J-function of P^n: F_d is the inverse of prod_(k=1..d) (H + kt)^(n+1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    if trunc < 0:
        raise ValueError("truncation must be >= 0")
    spec = RingSpec.projective(n)
    ring = spec.ring
    h = LaurentClass.from_coh(ring.generator("H"))
    coeffs = {(0,): LaurentClass.one(ring)}
    denom = LaurentClass.one(ring)
    for d in range(1, trunc + 1):
        denom = denom * (h + LaurentClass.t_power(ring, 1, d)) ** (n + 1)
        coeffs[(d,)] = laurent_invert(denom)
    return JFunction(spec, trunc, coeffs)


def j_product(j1, j2):
    """Tensor two J-functions into one on the product target.

    Truncations must agree; the (d, d') coefficient is the product of the
    embedded factor coefficients.
    """
    if j1.trunc != j2.trunc:
        raise ValueError("truncations differ: %d vs %d" % (j1.trunc, j2.trunc))

    def flatten(spec):
        if spec.kind == "product":
            return list(spec.components)
        return [spec]

    parts = flatten(j1.ring_spec) + flatten(j2.ring_spec)
    spec = RingSpec.product(parts)
    offset1 = len(j1.ring_spec.ring.gens)
    coeffs = {}
    for d1, c1 in j1.coeffs.items():
        e1 = _embed_block(spec, 0, c1)
        for d2, c2 in j2.coeffs.items():
            if sum(d1) + sum(d2) > j1.trunc:
                continue
            e2 = _embed_block(spec, offset1, c2)
            coeffs[d1 + d2] = e1 * e2
    return JFunction(spec, j1.trunc, coeffs)


def _embed_block(spec, offset, lc):
    """Re-key a factor coefficient into the product ring at a generator offset."""
    ring = spec.ring
    width = len(ring.gens)
    out = {}
    for t_exp, coh in lc.terms.items():
        coeffs = {}
        for e, v in coh.coeffs.items():
            exps = [0] * width
            exps[offset:offset + len(e)] = list(e)
            coeffs[tuple(exps)] = v
        out[t_exp] = CohClass(ring, coeffs)
    return LaurentClass(ring, out)


class IFunction:
    """Hypergeometric series attached to a degree-l hypersurface in P^n.

    Lives on the ambient projective ring; I_0 = lH and every coefficient
    carries at least one power of H.
    """

    __slots__ = ("ring_spec", "l", "trunc", "coeffs")

    def __init__(self, ring_spec, l, trunc, coeffs):
        if ring_spec.kind != "projective":
            raise ValueError("I-functions live on a projective ambient ring")
        self.ring_spec = ring_spec
        self.l = int(l)
        self.trunc = int(trunc)
        self.coeffs = {tuple(d): c for d, c in coeffs.items() if not c.is_zero()}

    def coefficient(self, d):
        if isinstance(d, int):
            d = (d,)
        return self.coeffs.get(tuple(d), LaurentClass.zero(self.ring_spec.ring))

    def series(self):
        return QSeries(self.ring_spec.ring, 1, self.trunc, dict(self.coeffs))

    @classmethod
    def from_pushed(cls, j_pushed, l):
        """View a pushed J-function (F_0 = lH) as I-function input again."""
        return cls(j_pushed.ring_spec, l, j_pushed.trunc, dict(j_pushed.coeffs))

    def to_json(self):
        from .fmt import fmt_tuple
        coeffs = {}
        for d in sorted(self.coeffs):
            coeffs[fmt_tuple(d)] = laurent_to_json(self.coeffs[d])
        return {"ring": self.ring_spec.to_json(), "l": self.l, "D": self.trunc,
                "coefficients": coeffs}

    @classmethod
    def from_json(cls, data):
        from .fmt import parse_tuple
        spec = RingSpec.from_json(data["ring"])
        coeffs = {}
        for d_str, lc_data in data["coefficients"].items():
            coeffs[parse_tuple(d_str)] = laurent_from_json(spec.ring, lc_data)
        return cls(spec, int(data["l"]), int(data["D"]), coeffs)

    def __eq__(self, other):
        if not isinstance(other, IFunction):
            return NotImplemented
        return (self.ring_spec == other.ring_spec and self.l == other.l
                and self.trunc == other.trunc and self.coeffs == other.coeffs)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq


def i_function(n, l, trunc):
    """I_d = prod_(k=0..dl) (lH + kt) * inverse of prod_(k=1..d) (H + kt)^(n+1).

    The k = 0 numerator factor contributes the uniform lH, so I_0 = lH and
    every coefficient is divisible by H.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if not 1 <= l <= n + 1:
        raise ValueError("need 1 <= l <= n + 1")
    if trunc < 0:
        raise ValueError("truncation must be >= 0")
    spec = RingSpec.projective(n)
    ring = spec.ring
    h = LaurentClass.from_coh(ring.generator("H"))
    lh = h * Fraction(l)
    coeffs = {(0,): lh}
    numer = lh
    denom = LaurentClass.one(ring)
    for d in range(1, trunc + 1):
        for k in range((d - 1) * l + 1, d * l + 1):
            numer = numer * (lh + LaurentClass.t_power(ring, 1, k))
        denom = denom * (h + LaurentClass.t_power(ring, 1, d)) ** (n + 1)
        coeffs[(d,)] = numer * laurent_invert(denom)
    return IFunction(spec, l, trunc, coeffs)


class MirrorData:
    """Result of the mirror transformation: scalar series a, b, c and pushed J."""

    __slots__ = ("a", "b", "c", "pushed", "l")

    def __init__(self, a, b, c, pushed, l):
        self.a = a
        self.b = b
        self.c = c
        self.pushed = pushed
        self.l = l

    def to_json(self):
        from .fmt import scalar_series_to_json
        return {"a": scalar_series_to_json(self.a),
                "b": scalar_series_to_json(self.b),
                "c": scalar_series_to_json(self.c),
                "normalized": self.pushed.to_json()}


def _apply_mirror(i_series, ring, trunc, a, b, c):
    """exp(b + (c + H a)/t) * I(q exp(a)) at the current corrections."""
    h_coh = ring.generator("H")
    exponent = QSeries.zero(ring, 1, trunc)
    for (d,), v in b.terms.items():
        exponent = exponent + QSeries(ring, 1, trunc, {(d,): v})
    for (d,), v in c.terms.items():
        exponent = exponent + QSeries(ring, 1, trunc, {(d,): v.shift(-1)})
    for (d,), v in a.terms.items():
        hv = v * h_coh
        if not hv.is_zero():
            exponent = exponent + QSeries(ring, 1, trunc, {(d,): hv.shift(-1)})
    prefactor = qs_exp(exponent)
    substituted = qs_compose(i_series, a)
    return prefactor * substituted


def mirror_normalize(i_fun):
    """Solve for the mirror transformation order by order in q.

    Finds scalar series a, b, c with zero constant term such that

        Jhat = exp(b(q) + (c(q) + H*a(q))/t) * I(q*exp(a(q)))

    has, in every q-degree d >= 1, zero coefficient on H t^0, H t^-1 and
    H^2 t^-1.  Each condition responds diagonally through I_0 = lH, so the
    per-order solve divides by l; a zero l would make it singular.  After the
    last order the full normalization is verified: the d = 0 term must be
    exactly lH and all d >= 1 terms must have t-exponents <= -2, otherwise
    NormalizationFailed reports the surviving term.
    """
    spec = i_fun.ring_spec
    ring = spec.ring
    n = spec.n
    l = i_fun.l
    trunc = i_fun.trunc
    if l == 0:
        raise DegenerateSystem("correction response is l = 0")
    i_series = i_fun.series()
    a = QSeries.zero(ring, 1, trunc)
    b = QSeries.zero(ring, 1, trunc)
    c = QSeries.zero(ring, 1, trunc)
    inv_l = Fraction(1, l)
    for d in range(1, trunc + 1):
        jhat = _apply_mirror(i_series, ring, trunc, a, b, c)
        fd = jhat.coefficient((d,))
        r1 = fd.coeff((1,), 0)
        r2 = fd.coeff((1,), -1)
        r3 = fd.coeff((2,), -1) if n >= 2 else Fraction(0)
        if r1:
            b = b - QSeries(ring, 1, trunc,
                            {(d,): LaurentClass.t_power(ring, 0, r1 * inv_l)})
        if r2:
            c = c - QSeries(ring, 1, trunc,
                            {(d,): LaurentClass.t_power(ring, 0, r2 * inv_l)})
        if r3:
            a = a - QSeries(ring, 1, trunc,
                            {(d,): LaurentClass.t_power(ring, 0, r3 * inv_l)})
    jhat = _apply_mirror(i_series, ring, trunc, a, b, c)
    lh = LaurentClass.from_coh(ring.generator("H") * l)
    if jhat.coefficient((0,)) != lh:
        raise NormalizationFailed("degree-0 term is %r, expected %r"
                                  % (jhat.coefficient((0,)), lh))
    for d in range(1, trunc + 1):
        fd = jhat.coefficient((d,))
        bad = [j for j in fd.terms if j > -2]
        if bad:
            raise NormalizationFailed(
                "degree %d retains t-exponent %d after normalization"
                % (d, max(bad)))
    pushed = JFunction(spec, trunc, {d: v for d, v in jhat.terms.items()})
    return MirrorData(a, b, c, pushed, l)


def pull_to_hypersurface(j_pushed, l):
    """Divide every coefficient by lH, landing in the hypersurface ring.

    Inverts the hypersurface pushforward term by term.  A coefficient with a
    scalar (H^0) component is not in the image and raises NotDivisible.
    """
    spec = j_pushed.ring_spec
    if spec.kind != "projective":
        raise ValueError("pushed J-functions live on a projective ring")
    hyp = RingSpec.hypersurface(spec.n, l)
    inv_l = Fraction(1, l)

    def divide(coh):
        out = {}
        for (e,), v in coh.coeffs.items():
            if e == 0:
                raise NotDivisible("term %s lacks the uniform H factor" % v)
            out[(e - 1,)] = v * inv_l
        return CohClass(hyp.ring, out)

    coeffs = {}
    for d, lc in j_pushed.coeffs.items():
        coeffs[d] = lc.map_coefficients(divide, hyp.ring)
    return JFunction(hyp, j_pushed.trunc, coeffs)
