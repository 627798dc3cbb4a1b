"""Canonical text encoding of exact values for reports and JSON payloads.

Rationals always print as "p/q" (or "p" when the denominator is 1), never as
decimals.  Exponent and degree tuples join with commas so multi-variable keys
stay readable JSON strings.
"""

from fractions import Fraction


def fmt_fraction(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_fraction(s):
    return Fraction(s)


def fmt_tuple(t):
    return ",".join(str(int(x)) for x in t)


def parse_tuple(s):
    s = s.strip()
    if not s:
        return ()
    return tuple(int(p) for p in s.split(","))


def laurent_to_json(lc):
    """{"t_exp": {"exps": "p/q"}} with keys in sorted numeric order."""
    out = {}
    for j in sorted(lc.terms):
        coh = lc.terms[j]
        out[str(j)] = {fmt_tuple(e): fmt_fraction(coh.coeffs[e])
                       for e in sorted(coh.coeffs)}
    return out


def laurent_from_json(ring, data):
    from .laurent import LaurentClass
    from .ring import CohClass
    terms = {}
    for j_str, coeffs in data.items():
        coh = {}
        for e_str, v_str in coeffs.items():
            v = parse_fraction(v_str)
            if v:
                coh[parse_tuple(e_str)] = v
        if coh:
            terms[int(j_str)] = CohClass(ring, coh)
    return LaurentClass(ring, terms)


def scalar_series_to_json(qs):
    """Scalar q-series as {"d" or "d1,d2": "p/q"} in sorted degree order."""
    coeffs = qs.scalar_coefficients()
    return {fmt_tuple(d): fmt_fraction(v) for d in sorted(coeffs)
            for v in [coeffs[d]] if v}
