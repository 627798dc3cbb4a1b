"""Truncated polynomial rings Q[v1,...,vk]/(v1^N1,...,vk^Nk) with exact coefficients.

A Ring records generator names, per-generator truncation orders and an
integration normalization.  Elements are CohClass values: sparse dictionaries
mapping exponent tuples to nonzero Fractions.  All arithmetic is exact; there
is no floating point anywhere in this package.
"""

from fractions import Fraction

from .errors import RingMismatch


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected an int or Fraction, got %r" % (x,))


class Ring:
    """Descriptor of a truncated polynomial ring over Q.

    gens   -- tuple of generator names, e.g. ("H",) or ("z1", "z2")
    truncs -- tuple of truncation orders; generator i satisfies v_i^truncs[i] = 0
    norm   -- Fraction multiplying the top coefficient under integration
    """

    __slots__ = ("gens", "truncs", "norm")

    def __init__(self, gens, truncs, norm=Fraction(1)):
        gens = tuple(gens)
        truncs = tuple(int(t) for t in truncs)
        if len(gens) != len(truncs):
            raise ValueError("generator and truncation counts differ")
        if len(set(gens)) != len(gens):
            raise ValueError("generator names must be distinct")
        if any(t < 1 for t in truncs):
            raise ValueError("truncation orders must be >= 1")
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "truncs", truncs)
        object.__setattr__(self, "norm", as_fraction(norm))

    def __setattr__(self, name, value):
        raise AttributeError("Ring is immutable")

    def __eq__(self, other):
        if not isinstance(other, Ring):
            return NotImplemented
        return (self.gens == other.gens and self.truncs == other.truncs
                and self.norm == other.norm)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.gens, self.truncs, self.norm))

    def __repr__(self):
        parts = ", ".join("%s^%d" % (g, t) for g, t in zip(self.gens, self.truncs))
        return "Ring(Q[%s]/(%s))" % (", ".join(self.gens), parts)

    @property
    def zero_exp(self):
        return (0,) * len(self.gens)

    @property
    def top_exp(self):
        """Exponent tuple of the top nonzero monomial (each entry trunc - 1)."""
        return tuple(t - 1 for t in self.truncs)

    @property
    def nilpotency_bound(self):
        """Smallest B with u^B = 0 for every u lacking a scalar part."""
        return 1 + sum(t - 1 for t in self.truncs)

    def admits(self, exps):
        return (len(exps) == len(self.truncs)
                and all(0 <= e < t for e, t in zip(exps, self.truncs)))

    def zero(self):
        return CohClass(self, {})

    def one(self):
        return self.monomial(self.zero_exp)

    def monomial(self, exps, coeff=1):
        exps = tuple(exps)
        c = as_fraction(coeff)
        if not self.admits(exps):
            if len(exps) != len(self.truncs) or any(e < 0 for e in exps):
                raise ValueError("bad exponent tuple %r for %r" % (exps, self))
            return CohClass(self, {})
        if c == 0:
            return CohClass(self, {})
        return CohClass(self, {exps: c})

    def generator(self, name):
        if name not in self.gens:
            raise KeyError(name)
        i = self.gens.index(name)
        exps = [0] * len(self.gens)
        exps[i] = 1
        return self.monomial(tuple(exps))


class CohClass:
    """Element of a Ring: finitely many monomials with Fraction coefficients.

    The coefficient dictionary never stores zero values and never stores an
    exponent at or beyond its generator's truncation order.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs

    def is_zero(self):
        return not self.coeffs

    def coeff(self, exps):
        return self.coeffs.get(tuple(exps), Fraction(0))

    @property
    def scalar_part(self):
        """Coefficient of the monomial with all exponents zero."""
        return self.coeffs.get(self.ring.zero_exp, Fraction(0))

    def homogeneous_degree(self):
        """Total degree if homogeneous, None for zero or mixed degrees."""
        degs = {sum(e) for e in self.coeffs}
        if len(degs) == 1:
            return degs.pop()
        return None

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatch("cannot combine elements of %r and %r"
                               % (self.ring, other.ring))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.monomial(self.ring.zero_exp, other)
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return CohClass(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return CohClass(self.ring, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.monomial(self.ring.zero_exp, other)
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if c == 0:
                return self.ring.zero()
            return CohClass(self.ring, {e: v * c for e, v in self.coeffs.items()})
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check_ring(other)
        truncs = self.ring.truncs
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x >= t for x, t in zip(e, truncs)):
                    continue
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return CohClass(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_fraction(other)
        if c == 0:
            raise ZeroDivisionError("division of a ring element by zero")
        return self * (Fraction(1) / c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.monomial(self.ring.zero_exp, other)
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __repr__(self):
        if not self.coeffs:
            return "0"
        gens = self.ring.gens
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            factors = []
            for g, k in zip(gens, e):
                if k == 1:
                    factors.append(g)
                elif k > 1:
                    factors.append("%s^%d" % (g, k))
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append("%s*%s" % (c, "*".join(factors)))
        return " + ".join(parts).replace("+ -", "- ")
