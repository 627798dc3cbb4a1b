"""Symmetric polynomials in q_1..q_m with exact coefficients.

SymPoly validates symmetry on construction (adjacent transpositions suffice)
and reports a witness transposition when the check fails.  The module also
provides Schur polynomials, Schur expansion by alternant peeling, and the top
Chern class of the symmetric power of the tautological rank-2 bundle, which
together form the classical oracle for Grassmannian integrals.
"""

import itertools
from fractions import Fraction

from .errors import InexactDivision, NotSymmetric
from .laurent import LaurentClass
from .ring import as_fraction

# ---------------------------------------------------------------------------
# raw polynomial dictionaries {exponent tuple: Fraction}; no symmetry implied


def p_zero():
    return {}

def p_const(m, c):
    c = as_fraction(c)
    return {(0,) * m: c} if c else {}

def p_var(m, i):
    """The variable q_(i+1) as a raw polynomial."""
    e = [0] * m
    e[i] = 1
    return {tuple(e): Fraction(1)}

def p_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, Fraction(0)) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out

def p_neg(a):
    return {e: -c for e, c in a.items()}

def p_sub(a, b):
    return p_add(a, p_neg(b))

def p_scale(a, r):
    r = as_fraction(r)
    if r == 0:
        return {}
    return {e: c * r for e, c in a.items()}

def p_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, Fraction(0)) + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return out

def p_pow(a, k, m):
    out = p_const(m, 1)
    for _ in range(k):
        out = p_mul(out, a)
    return out


def complete_homogeneous(m, k):
    """h_k in m variables: the sum of all monomials of total degree k."""
    if k < 0:
        return {}
    out = {}
    for bars in itertools.combinations_with_replacement(range(m), k):
        e = [0] * m
        for i in bars:
            e[i] += 1
        out[tuple(e)] = out.get(tuple(e), Fraction(0)) + 1
    return {e: c for e, c in out.items() if c}


def schur_poly(m, partition):
    """Schur polynomial s_partition in m variables via the h-determinant."""
    lam = tuple(int(x) for x in partition)
    if any(a < 0 for a in lam):
        raise ValueError("partition entries must be nonnegative")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("partition must be weakly decreasing")
    lam = tuple(a for a in lam if a > 0)
    if len(lam) > m:
        return {}
    if not lam:
        return p_const(m, 1)
    r = len(lam)
    out = {}
    for sigma in itertools.permutations(range(r)):
        sign = _perm_sign(sigma)
        prod = p_const(m, 1)
        for i in range(r):
            prod = p_mul(prod, complete_homogeneous(m, lam[i] - i + sigma[i]))
            if not prod:
                break
        out = p_add(out, p_scale(prod, sign))
    return out


def _perm_sign(sigma):
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


def monomial_symmetric(m, partition):
    """Monomial symmetric polynomial: sum of distinct permutations of q^partition."""
    lam = tuple(int(x) for x in partition)
    if len(lam) > m:
        raise ValueError("partition longer than the number of variables")
    padded = lam + (0,) * (m - len(lam))
    out = {}
    for perm in set(itertools.permutations(padded)):
        out[perm] = Fraction(1)
    return out


# ---------------------------------------------------------------------------


class SymPoly:
    """Symmetric polynomial in q_1..q_m, validated on construction."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        self.m = int(m)
        clean = {}
        for e, c in coeffs.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.m:
                raise ValueError("exponent tuple %r has wrong arity" % (e,))
            if any(x < 0 for x in e):
                raise ValueError("negative exponent in %r" % (e,))
            c = as_fraction(c)
            if c:
                clean[e] = c
        for i in range(self.m - 1):
            for e, c in clean.items():
                swapped = list(e)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if clean.get(tuple(swapped), Fraction(0)) != c:
                    raise NotSymmetric(
                        "not symmetric: swapping q%d and q%d changes the "
                        "coefficient of %r" % (i + 1, i + 2, e),
                        witness=(i + 1, i + 2))
        self.coeffs = clean

    @classmethod
    def from_schur(cls, m, partition):
        return cls(m, schur_poly(m, partition))

    @classmethod
    def from_monomial_orbit(cls, m, partition):
        return cls(m, monomial_symmetric(m, partition))

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Top total degree, or -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(sum(e) for e in self.coeffs)

    def is_homogeneous(self):
        return len({sum(e) for e in self.coeffs}) <= 1

    def __add__(self, other):
        if not isinstance(other, SymPoly) or other.m != self.m:
            return NotImplemented
        return SymPoly(self.m, p_add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, SymPoly) or other.m != self.m:
            return NotImplemented
        return SymPoly(self.m, p_sub(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPoly(self.m, p_scale(self.coeffs, other))
        if not isinstance(other, SymPoly) or other.m != self.m:
            return NotImplemented
        return SymPoly(self.m, p_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def evaluate(self, args):
        """Evaluate at LaurentClass arguments (one per variable).

        Powers are cached per argument, so repeated exponents cost one
        multiplication each.
        """
        if len(args) != self.m:
            raise ValueError("expected %d arguments, got %d" % (self.m, len(args)))
        if not args:
            raise ValueError("no variables to evaluate")
        ring = args[0].ring
        powers = []
        for a in args:
            if a.ring != ring:
                raise ValueError("evaluation arguments live in different rings")
            powers.append({0: LaurentClass.one(ring)})
        out = LaurentClass.zero(ring)
        for e, c in sorted(self.coeffs.items()):
            prod = LaurentClass.t_power(ring, 0, c)
            for i, k in enumerate(e):
                cache = powers[i]
                if k not in cache:
                    top = max(cache)
                    for j in range(top + 1, k + 1):
                        cache[j] = cache[j - 1] * args[i]
                prod = prod * cache[k]
            out = out + prod
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "*".join("q%d^%d" % (i + 1, k) if k > 1 else "q%d" % (i + 1)
                            for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append("%s*%s" % (c, mono))
        return " + ".join(parts)


def sym_power_top_chern(l):
    """Top Chern class of Sym^l of the dual tautological bundle on G(2, n).

    In Chern roots q1, q2 this is the product of (i*q1 + (l-i)*q2) over
    i = 0..l, a symmetric polynomial of degree l + 1.
    """
    if l < 1:
        raise ValueError("symmetric power degree must be >= 1")
    out = p_const(2, 1)
    for i in range(l + 1):
        factor = p_add(p_scale(p_var(2, 0), i), p_scale(p_var(2, 1), l - i))
        out = p_mul(out, factor)
    return SymPoly(2, out)


def _alternant(m, mu):
    """Alternating sum of sign(sigma) * q^(sigma applied to mu)."""
    out = {}
    for sigma in itertools.permutations(range(m)):
        e = tuple(mu[sigma[i]] for i in range(m))
        out[e] = out.get(e, Fraction(0)) + _perm_sign(sigma)
    return {e: c for e, c in out.items() if c}


def schur_expand(tau):
    """Expand a symmetric polynomial in the Schur basis.

    Multiplies by the Vandermonde alternant and peels leading terms: the lex
    largest monomial of an alternating polynomial has strictly decreasing
    exponents, which identifies one Schur component; subtract and repeat.
    Returns {partition: Fraction} with trailing zeros stripped from keys.
    InexactDivision signals a leading term that is not strictly decreasing,
    which cannot happen for genuinely symmetric input.
    """
    m = tau.m
    delta = tuple(range(m - 1, -1, -1))
    work = p_mul(tau.coeffs, _alternant(m, delta))
    out = {}
    while work:
        lead = max(work)
        if any(lead[i] <= lead[i + 1] for i in range(m - 1)):
            raise InexactDivision(
                "leading term %r of the alternant product is not strictly "
                "decreasing" % (lead,))
        lam = tuple(lead[i] - delta[i] for i in range(m))
        c = work[lead]
        key = tuple(a for a in lam if a > 0)
        out[key] = out.get(key, Fraction(0)) + c
        work = p_sub(work, p_scale(_alternant(m, lead), c))
    return {k: v for k, v in out.items() if v}


def schur_integral_oracle(m, n, tau):
    """Integral of tau over the Grassmannian of m-planes in C^n.

    Reads off the coefficient of the Schur class of the full box partition
    ((n-m)^m) in the Schur expansion; every other component integrates to
    zero.  Returns 0 whenever the degree of tau differs from m(n-m).
    """
    if tau.m != m:
        raise ValueError("tau has %d variables, expected %d" % (tau.m, m))
    if not 1 <= m < n:
        raise ValueError("need 1 <= m < n")
    box = tuple(a for a in (n - m,) * m if a > 0)
    return schur_expand(tau).get(box, Fraction(0))
