"""Registry of dissection identities between Euler products.

Each entry builds both sides at a requested precision; verification
compares them exactly, or mod 2 for the binomial-square family.  The
two-term right sides follow the pattern A(q) + sign * q * B(q) with A
and B plain eta-power products.
"""

from collections import namedtuple

from . import series
from .eta import power_product
from .series import euler_series, make_series

__all__ = [
    "identity_ids", "build_sides", "verify", "VerifyResult",
    "rr_R_series", "five_dissect_check", "DissectSupport",
]


def rr_R_series(prec):
    """(q^2; q^5)(q^3; q^5) / ((q; q^5)(q^4; q^5))."""
    num = series.mul(series.pochhammer(2, 5, prec), series.pochhammer(3, 5, prec))
    den = series.mul(series.pochhammer(1, 5, prec), series.pochhammer(4, 5, prec))
    return series.mul(num, series.invert(den))


def _two_term(prec, first, second, sign):
    a = power_product(first, prec)
    b = series.shift(power_product(second, prec - 1), 1)
    return series.add(a, series.scale(b, sign))


def _build_d1(prec):
    lhs = power_product({1: 1, 3: -3}, prec)
    rhs = _two_term(prec, {2: 1, 4: 2, 12: 2, 6: -7},
                    {2: 3, 12: 6, 4: -2, 6: -9}, -1)
    return lhs, rhs


def _build_d2(prec):
    lhs = power_product({1: -1, 3: -1}, prec)
    rhs = _two_term(prec, {8: 2, 12: 5, 2: -2, 4: -1, 6: -4, 24: -2},
                    {4: 5, 24: 2, 2: -4, 6: -2, 8: -2, 12: -1}, 1)
    return lhs, rhs


def _build_d3(prec):
    lhs = power_product({3: 3, 1: -1}, prec)
    rhs = _two_term(prec, {4: 3, 6: 2, 2: -2, 12: -1}, {12: 3, 4: -1}, 1)
    return lhs, rhs


def _build_d4(prec):
    lhs = power_product({1: 1, 5: -1}, prec)
    rhs = _two_term(prec, {2: 1, 8: 1, 20: 3, 4: -1, 10: -3, 40: -1},
                    {4: 2, 40: 1, 8: -1, 10: -2}, -1)
    return lhs, rhs


def _build_d5(prec):
    lhs = power_product({1: 1, 5: 1}, prec)
    rhs = _two_term(prec, {4: 2, 10: 5, 2: -1, 5: -2, 20: -2},
                    {2: 5, 20: 2, 1: -2, 4: -2, 10: -1}, -1)
    return lhs, rhs


def _build_d6(prec):
    lhs = power_product({1: -1, 5: -1}, prec)
    rhs = _two_term(prec, {4: 3, 5: 2, 20: 1, 2: -4, 10: -4},
                    {1: 2, 4: 1, 20: 3, 2: -4, 10: -4}, 1)
    return lhs, rhs


def _build_d7(prec):
    lhs = euler_series(1, prec)
    r5 = series.substitute_power(rr_R_series(prec // 5 + 2), 5)
    inner = series.sub(r5, series.shift(series.invert(r5), 2))
    mono = make_series(1, [1] + [0] * (inner.precision - 2), inner.precision)
    inner = series.sub(inner, mono)
    rhs = series.mul(euler_series(25, prec), inner)
    return lhs, rhs


def _make_binomial(k):
    def build(prec):
        return euler_series(2 * k, prec), series.pow(euler_series(k, prec), 2)
    return build


_Identity = namedtuple("_Identity", "identity_id modulus build")

_REGISTRY = [
    _Identity("D1_f1_over_f3cubed", None, _build_d1),
    _Identity("D2_inv_f1f3", None, _build_d2),
    _Identity("D3_f3cubed_over_f1", None, _build_d3),
    _Identity("D4_f1_over_f5", None, _build_d4),
    _Identity("D5_f1_times_f5", None, _build_d5),
    _Identity("D6_inv_f1f5", None, _build_d6),
    _Identity("D7_rr_five_dissection", None, _build_d7),
] + [
    _Identity("B_binomial_mod2_%d" % k, 2, _make_binomial(k))
    for k in (1, 2, 3, 5, 10)
]

_BY_ID = {entry.identity_id: entry for entry in _REGISTRY}


def identity_ids():
    """Registry identifiers in their fixed order."""
    return tuple(entry.identity_id for entry in _REGISTRY)


def build_sides(identity_id, prec):
    """Both sides of the named identity at the given precision."""
    if identity_id not in _BY_ID:
        raise ValueError("unknown identity %r" % identity_id)
    return _BY_ID[identity_id].build(prec)


VerifyResult = namedtuple("VerifyResult", "identity_id prec modulus ok exponent left right")


def verify(identity_id, prec):
    """Compare both sides on their shared window (mod 2 where declared)."""
    if identity_id not in _BY_ID:
        raise ValueError("unknown identity %r" % identity_id)
    entry = _BY_ID[identity_id]
    lhs, rhs = entry.build(prec)
    hit = series.first_mismatch(lhs, rhs, min(lhs.precision, rhs.precision),
                                entry.modulus)
    if hit is None:
        return VerifyResult(identity_id, prec, entry.modulus, True, None, None, None)
    return VerifyResult(identity_id, prec, entry.modulus, False, *hit)


DissectSupport = namedtuple("DissectSupport", "ok violations")


def five_dissect_check(s, residues):
    """Check that the 5-dissection support of s lies inside residues.

    Each violation records the first offending exponent in a residue
    class outside the allowed set, with its coefficient.
    """
    violations = []
    for r in range(5):
        if r in residues:
            continue
        part = series.extract_progression(s, 5, r)
        for i, c in enumerate(part.coeffs):
            if c:
                violations.append((5 * (part.valuation + i) + r, c))
                break
    return DissectSupport(not violations, violations)
