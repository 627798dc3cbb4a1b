"""Residue extraction for Schubert problems on Grassmannians and flag bundles.

The torus (C^*)^m acts on a partial flag of subspaces of C^n with weights
t_i = w_i * t for distinct integers w_i.  Fixed loci contribute inverse Euler
classes; summing them and matching Laurent coefficients in t recovers the
pushforward of powers of the relative hyperplane classes zeta_s down the flag
tower.  With that table in hand, Grassmannian integrals of symmetric
polynomials in the Chern roots reduce to reading off one residue coefficient.
"""

import itertools
from fractions import Fraction
from math import comb

from .errors import MissingZetaEntry, RepeatedWeight
from .laurent import LaurentClass, laurent_invert
from .linalg import ExactSolver
from .ring import CohClass, Ring


def fiberdim(m, n):
    """Dimension of the flag fiber over the Grassmannian point: sum(n-i, i=2..m)."""
    return sum(n - i for i in range(2, m + 1))


def flag_band(m, n):
    """Largest |A| whose pushforward can be nonzero: fiberdim + n - 1."""
    return fiberdim(m, n) + n - 1


def pv_ring(n):
    """Cohomology of P(V) for V = C^n: Q[h]/(h^n), integral of h^(n-1) is 1."""
    return Ring(("h",), (n,), Fraction(1))


def zeta_ring(m, n):
    """Ring carrying the relative classes zeta_1..zeta_(m-1)."""
    band = flag_band(m, n)
    gens = tuple("z%d" % s for s in range(1, m))
    return Ring(gens, (band + 1,) * (m - 1), Fraction(1))


def combined_ring(m, n):
    """Ring with h and all zeta generators, for pulled-back Grassmannian classes."""
    band = flag_band(m, n)
    gens = ("h",) + tuple("z%d" % s for s in range(1, m))
    return Ring(gens, (n,) + (band + 1,) * (m - 1), Fraction(1))


class WeightVector:
    """Distinct integer torus weights w_1..w_m."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        weights = tuple(int(w) for w in weights)
        if len(set(weights)) != len(weights):
            raise RepeatedWeight("weights %r contain a repeat" % (weights,))
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, name, value):
        raise AttributeError("WeightVector is immutable")

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def __iter__(self):
        return iter(self.weights)

    def __eq__(self, other):
        if isinstance(other, WeightVector):
            return self.weights == other.weights
        if isinstance(other, tuple):
            return self.weights == other
        return NotImplemented

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return "WeightVector%r" % (self.weights,)


def _as_weights(w, m):
    wv = w if isinstance(w, WeightVector) else WeightVector(w)
    if len(wv) != m:
        raise ValueError("expected %d weights, got %d" % (m, len(wv)))
    return wv


def _check_perm(perm, m):
    if tuple(sorted(perm)) != tuple(range(1, m + 1)):
        raise ValueError("%r is not a permutation of 1..%d" % (perm, m))


def default_weight_samples(m, count):
    """Deterministic pairwise-distinct, mutually non-proportional weights."""
    return [tuple((s + 2) ** i - 1 for i in range(m)) for s in range(count)]


def flag_fixed_locus_euler(perm, w, n):
    """Equivariant Euler class of a fixed flag of coordinate lines.

    For the fixed locus indexed by the permutation I = (i_1..i_m) this is

        prod_(j<k) (t_(i_k) - t_(i_j)) * prod_(s=1..m-1) (t_(i_(s+1)) - t_(i_s) - zeta_s)

    specialized at t_i = w_i * t: a polynomial in t of degree
    m(m-1)/2 + (m-1) with zeta-linear corrections, invertible because the
    weights are distinct.
    """
    perm = tuple(perm)
    m = len(perm)
    _check_perm(perm, m)
    wv = _as_weights(w, m)
    ring = zeta_ring(m, n)
    out = LaurentClass.one(ring)
    for j in range(m):
        for k in range(j + 1, m):
            c = wv[perm[k] - 1] - wv[perm[j] - 1]
            out = out * LaurentClass.t_power(ring, 1, c)
    for s in range(1, m):
        c = wv[perm[s] - 1] - wv[perm[s - 1] - 1]
        factor = LaurentClass.t_power(ring, 1, c) - LaurentClass.from_coh(
            ring.generator("z%d" % s))
        out = out * factor
    return out


def projective_fixed_locus_euler(i, w, n):
    """Euler class of the i-th fixed point in the projectivized comparison space.

    prod_(s != i) (h + t_s - t_i)^n over Q[h]/(h^n), with t_i = w_i * t.
    """
    wv = WeightVector(w) if not isinstance(w, WeightVector) else w
    m = len(wv)
    if not 1 <= i <= m:
        raise ValueError("index i out of range")
    ring = pv_ring(n)
    h = LaurentClass.from_coh(ring.generator("h"))
    out = LaurentClass.one(ring)
    for s in range(1, m + 1):
        if s == i:
            continue
        factor = h + LaurentClass.t_power(ring, 1, wv[s - 1] - wv[i - 1])
        out = out * factor ** n
    return out


def grassmann_integral_residue(n, tau):
    """Integral of a symmetric polynomial over G(2, n) by residue extraction.

    Evaluates tau at the Chern roots (h, h + t), divides by (h + t)^n and
    reads the coefficient of h^(n-1) t^(-2) of h * tau(h, h+t) / (h+t)^n.
    Exact over Q; returns 0 when the degree of tau misses dim G(2, n).
    """
    if tau.m != 2:
        raise ValueError("residue extraction is implemented for m = 2")
    if n <= 2:
        raise ValueError("need n > 2")
    ring = pv_ring(n)
    h = LaurentClass.from_coh(ring.generator("h"))
    t = LaurentClass.t_power(ring, 1)
    val = tau.evaluate([h, h + t])
    expr = h * val * laurent_invert((h + t) ** n)
    return expr.coeff((n - 1,), -2)


def closed_form_m2(n, j):
    """Known value of the pushforward of zeta^j for the two-step flag.

    Equals binom(-n, j-n+2) * h^(j-n+2), zero outside 0 <= j-n+2 <= n-1.
    """
    ring = pv_ring(n)
    k = j - n + 2
    if k < 0 or k > n - 1:
        return ring.zero()
    c = Fraction((-1) ** k * comb(n + k - 1, k))
    return ring.monomial((k,), c)


class ZetaTable:
    """Pushforwards pi(zeta^A) down the flag tower, as classes in Q[h]/(h^n).

    Entries cover all multi-exponents A with |A| <= fiberdim + n - 1; beyond
    that band the pushforward vanishes for degree reasons and lookups return
    zero.  A missing entry inside the band raises MissingZetaEntry.
    """

    __slots__ = ("m", "n", "entries")

    def __init__(self, m, n, entries):
        self.m = int(m)
        self.n = int(n)
        self.entries = dict(entries)

    @property
    def band(self):
        return flag_band(self.m, self.n)

    @property
    def ring(self):
        return pv_ring(self.n)

    def entry(self, a_exps):
        a_exps = tuple(int(x) for x in a_exps)
        if len(a_exps) != self.m - 1:
            raise ValueError("exponent tuple has arity %d, expected %d"
                             % (len(a_exps), self.m - 1))
        if any(x < 0 for x in a_exps):
            raise ValueError("negative zeta exponent")
        if sum(a_exps) > self.band:
            return self.ring.zero()
        try:
            return self.entries[a_exps]
        except KeyError:
            raise MissingZetaEntry("no entry for zeta exponent %r" % (a_exps,))

    def flag_integral(self, a, a_exps):
        """Integral over the flag of h^a * zeta^A (a Fraction)."""
        if a < 0:
            raise ValueError("negative h exponent")
        if a > self.n - 1:
            return Fraction(0)
        return self.entry(a_exps).coeff((self.n - 1 - a,))

    def push_zeta(self, c):
        """Pushforward of a CohClass over zeta_ring(m, n)."""
        out = self.ring.zero()
        for exps, v in c.coeffs.items():
            out = out + self.entry(exps) * v
        return out

    def push_combined(self, c):
        """Pushforward of a CohClass over combined_ring(m, n); h passes through."""
        ring = self.ring
        out = ring.zero()
        for exps, v in c.coeffs.items():
            h_exp, a_exps = exps[0], exps[1:]
            out = out + ring.monomial((h_exp,), v) * self.entry(a_exps)
        return out

    def __eq__(self, other):
        if not isinstance(other, ZetaTable):
            return NotImplemented
        return (self.m == other.m and self.n == other.n
                and self.entries == other.entries)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq


def _zeta_exponents(m, n):
    """All A with |A| <= flag_band(m, n), sorted."""
    band = flag_band(m, n)
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for a in range(remaining + 1):
            rec(prefix + [a], remaining - a, slots - 1)

    rec([], band, m - 1)
    out.sort()
    return out


def _suggested_sample_count(m, n):
    band = flag_band(m, n)
    largest_level = comb(band + m - 2, m - 2) if m > 2 else 1
    return max(3, -(-largest_level // m) + 1)


def flag_pushforward_extract(m, n, weight_samples=None):
    """Solve for all pushforwards pi(zeta^A) by matching Laurent coefficients.

    For each weight sample and each choice of distinguished index i, the sum
    of inverse Euler classes over the (m-1)! fixed loci with i_1 = i must push
    forward to the product of inverse Euler factors of the i-th fixed point in
    P(V).  Expanding both sides in h^b t^j gives exact linear equations for
    the unknown coefficients of pi(zeta^A); the system is solved by exact
    Gauss-Jordan elimination.  Raises RankDeficient when the samples do not
    determine the table and Inconsistent when they contradict each other.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    if n <= m:
        raise ValueError("need n > m")
    if weight_samples is None:
        weight_samples = default_weight_samples(m, _suggested_sample_count(m, n))
    samples = [_as_weights(w, m) for w in weight_samples]
    if not samples:
        raise ValueError("at least one weight sample is required")

    exponents = _zeta_exponents(m, n)
    unknowns = [(a_exps, b) for a_exps in exponents for b in range(n)]
    solver = ExactSolver()
    perms = list(itertools.permutations(range(1, m + 1)))
    band = flag_band(m, n)
    for wv in samples:
        for i in range(1, m + 1):
            lhs = None
            for perm in perms:
                if perm[0] != i:
                    continue
                inv = laurent_invert(flag_fixed_locus_euler(perm, wv, n))
                lhs = inv if lhs is None else lhs + inv
            rhs = laurent_invert(projective_fixed_locus_euler(i, wv, n))
            for j in sorted(set(lhs.terms) | set(rhs.terms)):
                lc = lhs.coefficient(j)
                rc = rhs.coefficient(j)
                for b in range(n):
                    row = {}
                    for a_exps, r in lc.coeffs.items():
                        if sum(a_exps) <= band:
                            row[(a_exps, b)] = r
                    solver.add_equation(row, rc.coeff((b,)))
    values = solver.solution(unknowns)

    ring = pv_ring(n)
    entries = {}
    for a_exps in exponents:
        coeffs = {}
        for b in range(n):
            v = values[(a_exps, b)]
            if v:
                coeffs[(b,)] = v
        entries[a_exps] = CohClass(ring, coeffs)
    return ZetaTable(m, n, entries)


def verify_euler_pushforward_identity(m, n, ztable, w):
    """Check the localization identity behind the extraction at one weight.

    Pushes the summed inverse Euler classes through the table and compares
    with the projective side exactly, for every distinguished index i.
    """
    wv = _as_weights(w, m)
    ring = pv_ring(n)
    for i in range(1, m + 1):
        lhs = None
        for perm in itertools.permutations(range(1, m + 1)):
            if perm[0] != i:
                continue
            inv = laurent_invert(flag_fixed_locus_euler(perm, wv, n))
            lhs = inv if lhs is None else lhs + inv
        pushed = lhs.map_coefficients(ztable.push_zeta, ring)
        rhs = laurent_invert(projective_fixed_locus_euler(i, wv, n))
        if pushed != rhs:
            return False
    return True


def _embed_zeta_combined(c, cring):
    out = {}
    for exps, v in c.coeffs.items():
        out[(0,) + exps] = v
    return CohClass(cring, out)


def verify_grassmann_pushforward(m, n, tau, w, ztable):
    """Check the residue identity for a pulled-back symmetric class.

    The pullback substitutes the partial sums h, h + zeta_1,
    h + zeta_1 + zeta_2, ... for the Chern roots; this is the unique
    assignment that closes the identity at m = 2.  For each distinguished
    index i, every monomial h^b t^j occurring in the pushforward of
    pullback * (summed inverse Euler classes) must match the projective-side
    coefficient exactly; right-side monomials outside the left support are
    the irrelevant terms and are ignored.  Returns True on agreement.
    """
    if tau.m != m:
        raise ValueError("tau has %d variables, expected %d" % (tau.m, m))
    wv = _as_weights(w, m)
    cring = combined_ring(m, n)
    ring = pv_ring(n)
    h_c = LaurentClass.from_coh(cring.generator("h"))
    args = []
    acc = h_c
    args.append(acc)
    for s in range(1, m):
        acc = acc + LaurentClass.from_coh(cring.generator("z%d" % s))
        args.append(acc)
    tau_tilde = tau.evaluate(args)

    h_p = LaurentClass.from_coh(ring.generator("h"))
    for i in range(1, m + 1):
        lhs = LaurentClass.zero(ring)
        for perm in itertools.permutations(range(1, m + 1)):
            if perm[0] != i:
                continue
            euler = flag_fixed_locus_euler(perm, wv, n)
            euler = euler.map_coefficients(
                lambda c: _embed_zeta_combined(c, cring), cring)
            prod = tau_tilde * laurent_invert(euler)
            lhs = lhs + prod.map_coefficients(ztable.push_combined, ring)
        rhs_args = [h_p + LaurentClass.t_power(ring, 1, wv[s] - wv[i - 1])
                    for s in range(m)]
        rhs = tau.evaluate(rhs_args) * laurent_invert(
            projective_fixed_locus_euler(i, wv, n))
        for j, c in lhs.terms.items():
            for exps, v in c.coeffs.items():
                if rhs.coeff(exps, j) != v:
                    return False
    return True
