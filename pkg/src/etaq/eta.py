"""Eta quotients and their expansions.

An eta factor contributes q^(delta/24) times the Euler product in
q^delta, so quotients carry a fractional exponent offset measured in
24ths.  This module expands quotients, holds the hauptmodul catalog,
and computes the weight/character/cusp-order data attached to a
quotient on Gamma_0(N).
"""

import re
from collections import namedtuple
from fractions import Fraction
from math import gcd

from . import series
from .series import euler_series, make_series

__all__ = [
    "EtaQuotient", "FractionalSeries", "LigozatReport", "CuspOrder",
    "HolomorphyReport", "HAUPTMODUL_NAMES", "F_SERIES_NAMES",
    "expand_eta", "expand_quotient", "power_product", "hauptmodul",
    "f_series", "ligozat_check", "cusp_order", "holomorphy_report",
    "format_quotient", "parse_quotient",
]


class EtaQuotient:
    """A formal product prod eta(delta tau)^r_delta with delta | level."""

    __slots__ = ("level", "exponents")

    def __init__(self, level, exponents):
        if level < 1:
            raise ValueError("level must be >= 1, got %d" % level)
        exps = {int(d): int(r) for d, r in exponents.items() if r != 0}
        if not exps:
            raise ValueError("eta quotient needs at least one nonzero exponent")
        for d in exps:
            if d < 1 or level % d:
                raise ValueError("delta %d does not divide level %d" % (d, level))
        self.level = level
        self.exponents = dict(sorted(exps.items()))

    def __eq__(self, other):
        if not isinstance(other, EtaQuotient):
            return NotImplemented
        return self.level == other.level and self.exponents == other.exponents

    __hash__ = None

    def __repr__(self):
        return "EtaQuotient(%r)" % format_quotient(self)


class FractionalSeries:
    """A Laurent series times the fractional monomial q^(offset24/24).

    Whole powers of q in the offset are folded into the body, so the
    stored offset always lies in [0, 24).
    """

    __slots__ = ("offset24", "body")

    def __init__(self, offset24, body):
        whole, frac = divmod(offset24, 24)
        self.offset24 = frac
        self.body = series.shift(body, whole) if whole else body

    def is_integral(self):
        return self.offset24 == 0

    def as_laurent(self):
        if self.offset24:
            raise ValueError(
                "fractional offset %d/24 cannot be a Laurent series" % self.offset24)
        return self.body

    def mul(self, other, mod=None):
        return FractionalSeries(self.offset24 + other.offset24,
                                series.mul(self.body, other.body, mod))

    def invert(self, mod=None):
        return FractionalSeries(-self.offset24, series.invert(self.body, mod))

    def pow(self, k, mod=None):
        return FractionalSeries(k * self.offset24, series.pow(self.body, k, mod))

    def add(self, other):
        if self.offset24 != other.offset24:
            raise ValueError("offsets %d/24 and %d/24 cannot be added"
                             % (self.offset24, other.offset24))
        return FractionalSeries(self.offset24, series.add(self.body, other.body))

    def sub(self, other):
        if self.offset24 != other.offset24:
            raise ValueError("offsets %d/24 and %d/24 cannot be subtracted"
                             % (self.offset24, other.offset24))
        return FractionalSeries(self.offset24, series.sub(self.body, other.body))

    def scale(self, k):
        return FractionalSeries(self.offset24, series.scale(self.body, k))

    def __eq__(self, other):
        if not isinstance(other, FractionalSeries):
            return NotImplemented
        return self.offset24 == other.offset24 and self.body == other.body

    __hash__ = None

    def __repr__(self):
        return "FractionalSeries(offset24=%d, %r)" % (self.offset24, self.body)


def expand_eta(delta, prec):
    """q^(delta/24) (q^delta; q^delta)_inf."""
    return FractionalSeries(delta, euler_series(delta, prec))


def power_product(exponents, prec, mod=None):
    """prod (q^d; q^d)^r over an exponent map, as a plain power series."""
    num = None
    den = None
    for d, r in sorted(exponents.items()):
        if r == 0:
            continue
        piece = series.pow(euler_series(d, prec), abs(r), mod=mod)
        if r > 0:
            num = piece if num is None else series.mul(num, piece, mod)
        else:
            den = piece if den is None else series.mul(den, piece, mod)
    if num is None:
        num = make_series(0, [1] + [0] * (prec - 1), prec)
    if den is not None:
        num = series.mul(num, series.invert(den, mod), mod)
    return num


def expand_quotient(f, prec, mod=None):
    """Expansion of an eta quotient; the offset is sum delta * r_delta."""
    offset = sum(d * r for d, r in f.exponents.items())
    return FractionalSeries(offset, power_product(f.exponents, prec, mod))


# ---------------------------------------------------------------------------
# hauptmodul catalog

# name -> (kernel eta exponents, added constant, coefficient of the
# inverted kernel for the Fricke-symmetrized variants)
_CATALOG = {
    "j2":   ({1: 24, 2: -24}, 24, None),
    "j2s":  ({1: 24, 2: -24}, 24, 4096),
    "j3":   ({1: 12, 3: -12}, 12, None),
    "j3s":  ({1: 12, 3: -12}, 12, 729),
    "j5":   ({1: 6, 5: -6}, 6, None),
    "j5s":  ({1: 6, 5: -6}, 6, 125),
    "j7":   ({1: 4, 7: -4}, 4, None),
    "j7s":  ({1: 4, 7: -4}, 4, 49),
    "j13":  ({1: 2, 13: -2}, 2, None),
    "j13s": ({1: 2, 13: -2}, 2, 13),
    "j6":   ({1: -3, 2: 3, 3: 9, 6: -9}, -3, None),
    "j6s":  ({1: 6, 2: -6, 3: 6, 6: -6}, 6, 64),
    "j10":  ({1: -1, 2: 1, 5: 5, 10: -5}, -1, None),
    "j10s": ({1: 4, 2: -4, 5: 4, 10: -4}, 4, 16),
}

_F_CATALOG = {"F6": "j6", "F6s": "j6s", "F10": "j10", "F10s": "j10s"}

HAUPTMODUL_NAMES = tuple(sorted(_CATALOG))
F_SERIES_NAMES = tuple(sorted(_F_CATALOG))


def hauptmodul(name, prec, mod=None):
    """Named hauptmodul as a Laurent series with valuation -1."""
    if name not in _CATALOG:
        raise ValueError("unknown hauptmodul %r" % name)
    if prec < 2:
        raise ValueError("hauptmodul precision must be >= 2, got %d" % prec)
    kern, const, cross = _CATALOG[name]
    out = series.shift(power_product(kern, prec + 1, mod), -1)
    if cross is not None:
        inv_kern = {d: -r for d, r in kern.items()}
        tail = series.scale(series.shift(power_product(inv_kern, prec - 1, mod), 1), cross)
        out = series.add(out, tail)
    out = series.add_const(out, const)
    if mod is not None:
        out = series.reduce_mod(out, mod)
    return out


def f_series(name, prec, mod=None):
    """Power-series companion of a hauptmodul: its kernel product alone."""
    if name not in _F_CATALOG:
        raise ValueError("unknown series %r" % name)
    if prec < 1:
        raise ValueError("precision must be >= 1, got %d" % prec)
    return power_product(_CATALOG[_F_CATALOG[name]][0], prec, mod)


# ---------------------------------------------------------------------------
# modularity data

LigozatReport = namedtuple(
    "LigozatReport",
    "weight sum_delta_r sum_level_over_delta_r cond24_upper cond24_lower "
    "integral_weight character_value character_kernel")

CuspOrder = namedtuple("CuspOrder", "c d order")

HolomorphyReport = namedtuple("HolomorphyReport", "orders is_holomorphic is_cuspidal")


def _squarefree_part(n):
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e & 1:
                out *= p
        p += 1 if p == 2 else 2
    return out * n


def ligozat_check(f):
    """Weight, the two 24-divisibility conditions, and the character.

    The character value is (-1)^weight * prod delta^r_delta, a rational
    number in general; its squarefree kernel generates the same
    quadratic character on integers coprime to the level.  Both are
    None when the weight is not integral.
    """
    exps = f.exponents
    N = f.level
    weight = Fraction(sum(exps.values()), 2)
    s_up = sum(d * r for d, r in exps.items())
    s_low = sum((N // d) * r for d, r in exps.items())
    integral = weight.denominator == 1
    value = kernel = None
    if integral:
        value = Fraction(1)
        for d, r in exps.items():
            value *= Fraction(d) ** r
        if weight % 2:
            value = -value
        core = _squarefree_part(abs(value.numerator) * value.denominator)
        kernel = -core if value < 0 else core
    return LigozatReport(weight, s_up, s_low, s_up % 24 == 0, s_low % 24 == 0,
                         integral, value, kernel)


def cusp_order(f, c, d):
    """Order of vanishing at the cusp c/d, d | level, gcd(c, d) = 1."""
    N = f.level
    if d < 1 or N % d:
        raise ValueError("cusp denominator %d must divide level %d" % (d, N))
    if gcd(c, d) != 1:
        raise ValueError("cusp %d/%d is not in lowest terms" % (c, d))
    g2 = gcd(d, N // d)
    total = Fraction(0)
    for delta, r in f.exponents.items():
        g = gcd(d, delta)
        total += Fraction(g * g * r, g2 * d * delta)
    return CuspOrder(c, d, Fraction(N, 24) * total)


def holomorphy_report(f):
    """Cusp orders at 1/d for every divisor d of the level, with flags."""
    divs = [d for d in range(1, f.level + 1) if f.level % d == 0]
    orders = [cusp_order(f, 1, d) for d in divs]
    return HolomorphyReport(orders,
                            all(o.order >= 0 for o in orders),
                            all(o.order > 0 for o in orders))


# ---------------------------------------------------------------------------
# text form

_QUOT_RE = re.compile(r"N=(\d+);\s*(\S.*)\Z")
_FACTOR_RE = re.compile(r"(\d+)\^(-?\d+)\Z")


def format_quotient(f):
    """Render as 'N=<level>; <delta>^<r> * ...' with deltas ascending."""
    body = " * ".join("%d^%d" % (d, r) for d, r in f.exponents.items())
    return "N=%d; %s" % (f.level, body)


def parse_quotient(text):
    """Inverse of format_quotient (factor order is immaterial)."""
    m = _QUOT_RE.match(text.strip())
    if not m:
        raise ValueError("bad eta quotient text: %r" % text)
    exps = {}
    for part in m.group(2).split("*"):
        fm = _FACTOR_RE.match(part.strip())
        if not fm:
            raise ValueError("bad eta factor: %r" % part.strip())
        d = int(fm.group(1))
        if d in exps:
            raise ValueError("repeated delta %d" % d)
        exps[d] = int(fm.group(2))
    return EtaQuotient(int(m.group(1)), exps)
