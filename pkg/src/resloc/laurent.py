"""Finite Laurent polynomials in the equivariant parameter t.

A LaurentClass stores a sparse map {t-exponent: CohClass}.  Coefficients live
in one fixed Ring; mixing rings raises RingMismatch.  Inversion is supported
exactly when the element is a unit times a single power of t, which is what
every Euler class produced by the localization formulas looks like.
"""

from fractions import Fraction

from .errors import NotInvertible, RingMismatch
from .ring import CohClass, Ring, as_fraction


class LaurentClass:
    """Sparse Laurent polynomial in t with CohClass coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    @classmethod
    def from_coh(cls, c, t_exp=0):
        if c.is_zero():
            return cls(c.ring, {})
        return cls(c.ring, {int(t_exp): c})

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def one(cls, ring):
        return cls(ring, {0: ring.one()})

    @classmethod
    def t_power(cls, ring, k, coeff=1):
        c = ring.monomial(ring.zero_exp, coeff)
        if c.is_zero():
            return cls(ring, {})
        return cls(ring, {int(k): c})

    def is_zero(self):
        return not self.terms

    def coefficient(self, t_exp):
        """CohClass multiplying t^t_exp (zero class if absent)."""
        return self.terms.get(t_exp, self.ring.zero())

    def coeff(self, exps, t_exp):
        """Rational coefficient of the monomial exps * t^t_exp.

        The exponent tuple must be valid for this element's ring.
        """
        exps = tuple(exps)
        if not self.ring.admits(exps):
            raise RingMismatch("exponent tuple %r is not valid for %r"
                               % (exps, self.ring))
        c = self.terms.get(t_exp)
        if c is None:
            return Fraction(0)
        return c.coeff(exps)

    def support(self):
        return sorted(self.terms)

    def min_t(self):
        return min(self.terms)

    def max_t(self):
        return max(self.terms)

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatch("cannot combine Laurent elements over %r and %r"
                               % (self.ring, other.ring))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentClass.t_power(self.ring, 0, other)
        if isinstance(other, CohClass):
            if other.ring != self.ring:
                raise RingMismatch("coefficient ring differs")
            return LaurentClass.from_coh(other)
        return None

    def __add__(self, other):
        if not isinstance(other, LaurentClass):
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for j, c in other.terms.items():
            s = out.get(j)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(j, None)
            else:
                out[j] = s
        return LaurentClass(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentClass(self.ring, {j: -c for j, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentClass):
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if c == 0:
                return LaurentClass(self.ring, {})
            return LaurentClass(self.ring,
                                {j: v * c for j, v in self.terms.items()})
        if isinstance(other, CohClass):
            other = self._coerce(other)
        if not isinstance(other, LaurentClass):
            return NotImplemented
        self._check_ring(other)
        out = {}
        for j1, c1 in self.terms.items():
            for j2, c2 in other.terms.items():
                j = j1 + j2
                p = c1 * c2
                if p.is_zero():
                    continue
                s = out.get(j)
                s = p if s is None else s + p
                if s.is_zero():
                    out.pop(j, None)
                else:
                    out[j] = s
        return LaurentClass(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = LaurentClass.one(self.ring)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentClass(self.ring, {j + k: c for j, c in self.terms.items()})

    def flip_t(self):
        """Substitute t -> -t."""
        return LaurentClass(self.ring,
                            {j: c * (1 if j % 2 == 0 else -1)
                             for j, c in self.terms.items()})

    def scale(self, r):
        return self * as_fraction(r)

    def map_coefficients(self, fn, ring):
        """Apply fn to every CohClass coefficient; fn maps into ring."""
        out = {}
        for j, c in self.terms.items():
            v = fn(c)
            if not v.is_zero():
                out[j] = v
        return LaurentClass(ring, out)

    def __eq__(self, other):
        if not isinstance(other, LaurentClass):
            coerced = self._coerce(other)
            if coerced is None:
                return NotImplemented
            other = coerced
        return self.ring == other.ring and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for j in sorted(self.terms):
            c = repr(self.terms[j])
            if j == 0:
                parts.append("(%s)" % c)
            else:
                parts.append("(%s)*t^%d" % (c, j))
        return " + ".join(parts)


def neg_part(e):
    """Terms of e with strictly negative t-exponent."""
    return LaurentClass(e.ring, {j: c for j, c in e.terms.items() if j < 0})


def pos_part(e):
    """Terms of e with t-exponent >= 0."""
    return LaurentClass(e.ring, {j: c for j, c in e.terms.items() if j >= 0})


def coeff(e, exps, t_exp):
    """Module-level alias for LaurentClass.coeff."""
    return e.coeff(exps, t_exp)


def laurent_invert(e):
    """Invert a Laurent element whose scalar part is a single t-monomial.

    Writing each coefficient as scalar plus nilpotent, the purely scalar part
    of e must consist of exactly one term c*t^k with c != 0.  Then
    e = c*t^k*(1 + u) where every monomial of u carries a nilpotent generator,
    so the geometric series for (1 + u)^-1 terminates and

        e^-1 = c^-1 * t^-k * sum_i (-u)^i.

    If the scalar part is empty the element is nilpotent (or zero) and has no
    inverse; if it has two or more terms the inverse would be an infinite
    series in t.  Both cases raise NotInvertible.
    """
    ring = e.ring
    scalars = {j: c.scalar_part for j, c in e.terms.items() if c.scalar_part != 0}
    if not scalars:
        raise NotInvertible("element has no scalar part; it is nilpotent or zero")
    if len(scalars) > 1:
        raise NotInvertible(
            "scalar part %s spreads over several powers of t; the inverse "
            "would be an infinite Laurent series" % sorted(scalars))
    (k, c), = scalars.items()
    unit = e * (Fraction(1) / c)
    unit = unit.shift(-k)
    u = unit - LaurentClass.one(ring)
    # every term of u now carries a nilpotent generator, so powers of u die
    out = LaurentClass.one(ring)
    power = LaurentClass.one(ring)
    bound = ring.nilpotency_bound
    for i in range(1, bound + 1):
        power = power * u
        if power.is_zero():
            break
        if i % 2 == 1:
            out = out - power
        else:
            out = out + power
    else:
        if not power.is_zero():
            raise NotInvertible("geometric series failed to terminate; "
                                "the element is not of unit form")
    return out.shift(-k) * (Fraction(1) / c)
