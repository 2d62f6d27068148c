"""Progression claims over series coefficients, with a built-in catalog.

A claim talks about the coefficients of a named expansion along an
arithmetic progression a*n + b.  A "vanishing" claim says every such
coefficient dies modulo the claim's modulus; a "parityEqual" claim says
two progressions (possibly on two different expansions) agree term by
term.  Series names are either catalog names like "j6s" or inline
expressions prefixed with "expr:".
"""

import threading
from collections import namedtuple
from fractions import Fraction

from . import dsl, eta, series
from .series import PrecisionError

ProgressionClaim = namedtuple(
    "ProgressionClaim",
    "id kind series a b series2 a2 b2 modulus n_max provenance",
)

ClaimReport = namedtuple("ClaimReport", "claim status at_n left right")

DensityPoint = namedtuple("DensityPoint", "upper count fraction")

ScanHit = namedtuple("ScanHit", "a b n_checked")

# Expansion lengths are capped so a runaway request fails fast instead of
# grinding; modular series are cheap enough to allow much longer windows.
MOD_CAP = 4_000_000
EXACT_CAP = 150_000
_GRAIN = 4096

_cache = {}
_lock = threading.RLock()


def series_cap(mod):
    return MOD_CAP if mod is not None else EXACT_CAP


def clear_cache():
    with _lock:
        _cache.clear()


def _build(name, prec, mod):
    if name.startswith("expr:"):
        return dsl.evaluate(dsl.parse(name[5:]), prec, mod).as_laurent()
    if name in eta.HAUPTMODUL_NAMES:
        return eta.hauptmodul(name, prec, mod)
    if name in eta.F_SERIES_NAMES:
        return eta.f_series(name, prec, mod)
    raise ValueError("unknown series %r" % name)


def series_for(name, prec, mod=None):
    """Fetch a named expansion at precision at least prec, with caching.

    Cached expansions only ever grow, rounded up to a coarse grain so
    nearby requests share one build.  Requests beyond the cap for the
    given modulus raise PrecisionError.
    """
    if prec < 1:
        raise ValueError("precision must be positive, got %d" % prec)
    cap = series_cap(mod)
    if prec > cap:
        kind = "exact" if mod is None else "modular"
        raise PrecisionError(
            "precision %d exceeds the %s cap %d" % (prec, kind, cap))
    key = (name, mod)
    with _lock:
        have = _cache.get(key)
        if have is not None and have.precision >= prec:
            return have
        target = min(cap, -(-prec // _GRAIN) * _GRAIN)
        built = _build(name, target, mod)
        _cache[key] = built
        return built


def _default_nmax(a):
    return 500 if a <= 100 else max(100, 50000 // a)


def builtin_claims():
    """The built-in catalog of modulo-2 progression claims."""
    rows = []

    def V(name, a, b, why, n_max=None):
        rows.append(("vanishing", name, a, b, None, None, None, n_max, why))

    def PE(name, a, b, name2, a2, b2, why, n_max=None):
        rows.append(("parityEqual", name, a, b, name2, a2, b2, n_max, why))

    # Dissection pieces of F6 and F6s with closed product forms.
    PE("F6", 2, 0, "expr:poch(2,2)^3/poch(6,6)^3", 1, 0,
       "F6 on 2n has a closed product form")
    PE("F6", 4, 0, "expr:poch(1,1)*poch(2,2)/poch(3,3)^3", 1, 0,
       "F6 on 4n has a closed product form")
    PE("F6", 8, 4, "expr:poch(3,3)^3", 1, 0,
       "F6 on 8n+4 has a closed product form")
    PE("F6", 24, 4, "expr:poch(1,1)*poch(2,2)", 1, 0,
       "F6 on 24n+4 has a closed product form")
    PE("F6s", 4, 0, "expr:poch(1,1)^3/poch(3,3)^3", 1, 0,
       "F6s on 4n has a closed product form")
    PE("F6s", 8, 2, "expr:poch(1,1)^3", 1, 0,
       "F6s on 8n+2 has a closed product form")
    V("F6", 2, 3, "F6 dies on odd indices past the first")
    V("F6", 4, 2, "F6 dies on 4n+2")
    V("F6s", 2, 1, "F6s dies on odd indices")

    # Dissection pieces of F10 and F10s.
    PE("F10", 4, 2, "expr:poch(1,1)*poch(5,5)", 1, 0,
       "F10 on 4n+2 has a closed product form")
    PE("F10", 4, 0, "expr:poch(4,4)/poch(10,10)", 1, 0,
       "F10 on 4n has a closed product form")
    V("F10", 8, 4, "F10 dies on 8n+4")
    PE("F10", 8, 0, "expr:poch(2,2)/poch(5,5)", 1, 0,
       "F10 on 8n has a closed product form")
    PE("F10s", 8, 0, "expr:poch(2,2)/poch(5,5)", 1, 0,
       "F10s on 8n has a closed product form")
    PE("F10", 8, 0, "F10s", 8, 0,
       "F10 and F10s agree on 8n")
    PE("F10s", 1, 0, "expr:1/(poch(4,4)*poch(20,20))", 1, 0,
       "F10s matches a reciprocal product everywhere")
    V("F10s", 4, 1, "F10s dies on 4n+1")
    V("F10s", 4, 2, "F10s dies on 4n+2")
    V("F10s", 4, 3, "F10s dies on 4n+3")
    V("F10", 40, 8, "F10 dies on 40n+8")
    V("F10", 40, 24, "F10 dies on 40n+24")
    V("F10s", 40, 8, "F10s dies on 40n+8")
    V("F10s", 40, 24, "F10s dies on 40n+24")
    PE("F10s", 8, 4, "F10s", 40, 16,
       "F10s on 8n+4 is carried entirely by 40n+16")
    PE("F10s", 40, 16, "F10", 40, 16,
       "F10s and F10 agree on 40n+16")
    PE("F10", 2, 0, "expr:poch(1,1)*poch(2,2)/(poch(5,5)*poch(10,10))", 1, 0,
       "F10 on 2n has a closed product form")
    PE("F10s", 4, 0, "expr:1/(poch(1,1)*poch(5,5))", 1, 0,
       "F10s on 4n has a closed product form")
    PE("F10", 1, 0, "expr:poch(1,1)/(poch(5,5)*poch(20,20))", 1, 0,
       "F10 matches a single quotient everywhere")
    PE("F6", 1, 0, "expr:poch(1,1)*poch(2,2)/(poch(3,3)^3*poch(6,6)^3)", 1, 0,
       "F6 matches a single quotient everywhere")
    PE("F6s", 1, 0, "expr:1/(poch(2,2)*poch(6,6))^3", 1, 0,
       "F6s matches a reciprocal cube everywhere")

    # Bridges to weight-one eta products.
    PE("F6", 24, 4, "expr:eta(8)*eta(16)", 8, 1,
       "F6 on 24n+4 matches the level-128 eta product on 8n+1", n_max=1999)
    PE("F10", 4, 2, "expr:eta(4)*eta(20)", 4, 1,
       "F10 on 4n+2 matches the level-80 eta product on 4n+1", n_max=1999)

    # Small progressions for j6 and j6s.
    V("j6s", 2, 0, "j6s dies on even indices")
    V("j6", 2, 0, "j6 dies on even indices")
    V("j6", 4, 1, "j6 dies on 4n+1")
    V("j6", 24, 11, "j6 dies on 24n+11")
    V("j6", 24, 19, "j6 dies on 24n+19")
    V("j6s", 24, 11, "j6s dies on 24n+11")
    V("j6s", 24, 19, "j6s dies on 24n+19")
    PE("j6s", 4, 3, "j6", 4, 3,
       "j6s and j6 agree on 4n+3")
    PE("j6s", 8, 1, "j6", 24, 3,
       "j6s on 8n+1 matches j6 on 24n+3")

    # Small progressions for j10 and j10s.
    V("j10", 40, 7, "j10 dies on 40n+7")
    V("j10", 40, 23, "j10 dies on 40n+23")
    V("j10s", 40, 7, "j10s dies on 40n+7")
    V("j10s", 40, 23, "j10s dies on 40n+23")
    V("j10", 2, 0, "j10 dies on even indices")
    V("j10", 8, 3, "j10 dies on 8n+3")
    V("j10s", 4, 0, "j10s dies on 4n")
    V("j10s", 4, 1, "j10s dies on 4n+1")
    V("j10s", 4, 2, "j10s dies on 4n+2")
    PE("j10", 40, 15, "j10s", 8, 3,
       "j10 on 40n+15 matches j10s on 8n+3")
    PE("j10s", 40, 15, "j10s", 8, 3,
       "j10s on 40n+15 matches j10s on 8n+3")

    # Vanishing families for j6s indexed by an odd prime p, a square
    # scale P*P coprime to 8p, a power of three, and 1 <= j < p.
    for m, big, p in [(0, 1, 3), (0, 1, 5), (0, 1, 7), (0, 1, 11),
                      (1, 1, 3), (1, 1, 5), (0, 3, 3)]:
        a = 8 * 3**m * big * big * p * p
        for j in range(1, p):
            b = 3**m * big * big * p * (8 * j + p)
            V("j6s", a, b,
              "j6s vanishing family m=%d P=%d p=%d j=%d" % (m, big, p, j))

    # The matching vanishing families for j6.
    for m, p in [(1, 3), (1, 5)]:
        a = 8 * 3**m * p * p
        for j in range(1, p):
            b = 3**m * p * (8 * j + p)
            V("j6", a, b, "j6 vanishing family m=%d p=%d j=%d" % (m, p, j))

    # Parity ladders for j6s: the p*p-scaled progression repeats the
    # progression one rung down.
    for a, b, a2, b2 in [
        (72, 9, 8, 1), (72, 81, 8, 9), (72, 153, 8, 17),
        (216, 9, 24, 1), (216, 81, 24, 9), (648, 9, 72, 1),
        (200, 25, 8, 1), (200, 225, 8, 9),
        (392, 49, 8, 1),
        (968, 121, 8, 1),
        (216, 27, 24, 3), (216, 243, 24, 27), (648, 27, 72, 3),
        (600, 75, 24, 3),
    ]:
        PE("j6s", a, b, "j6s", a2, b2,
           "parity of j6s transfers down a prime-square ladder")

    # The same ladders specialized to their smallest instance.
    for a, b, a2, b2 in [
        (72, 9, 8, 1), (648, 81, 8, 1), (200, 25, 8, 1),
        (392, 49, 8, 1), (968, 121, 8, 1),
        (216, 27, 24, 3), (600, 75, 24, 3),
    ]:
        PE("j6s", a, b, "j6s", a2, b2,
           "j6s ladder equality specialized to one rung")

    # Parity ladders for j6.
    for a, b, a2, b2 in [
        (216, 27, 24, 3), (216, 243, 24, 27), (216, 459, 24, 51),
        (648, 27, 72, 3), (600, 75, 24, 3),
    ]:
        PE("j6", a, b, "j6", a2, b2,
           "parity of j6 transfers down a prime-square ladder")
    for a, b, a2, b2 in [(216, 27, 24, 3), (600, 75, 24, 3)]:
        PE("j6", a, b, "j6", a2, b2,
           "j6 ladder equality specialized to one rung")

    # Vanishing families for j10.
    for big, p in [(1, 3), (1, 7), (1, 11), (3, 3)]:
        a = 4 * big * big * p * p
        for j in range(1, p):
            b = big * big * p * (4 * j + p)
            V("j10", a, b,
              "j10 vanishing family P=%d p=%d j=%d" % (big, p, j))

    # Parity ladders for j10.
    PE("j10", 36, 9, "j10", 4, 1,
       "parity of j10 transfers down a prime-square ladder")
    PE("j10", 36, 9, "j10", 4, 1,
       "parity of j10 transfers down the ladder, witness route")
    PE("j10", 108, 9, "j10", 12, 1,
       "parity of j10 transfers down a prime-square ladder")
    PE("j10", 324, 9, "j10", 36, 1,
       "parity of j10 transfers down a prime-square ladder")
    PE("j10", 36, 45, "j10", 4, 5,
       "parity of j10 transfers down a prime-square ladder")
    PE("j10", 196, 49, "j10", 4, 1,
       "parity of j10 transfers down a prime-square ladder")
    PE("j10", 484, 121, "j10", 4, 1,
       "parity of j10 transfers down a prime-square ladder")
    for a, b, a2, b2 in [(36, 9, 4, 1), (324, 81, 4, 1),
                         (196, 49, 4, 1), (484, 121, 4, 1)]:
        PE("j10", a, b, "j10", a2, b2,
           "j10 ladder equality specialized to one rung")

    # A two-piece closed form for the 4n slice of F10s.
    PE("F10s", 4, 0,
       "expr:poch(4,4)/poch(10,10)+q*poch(20,20)/poch(2,2)", 1, 0,
       "F10s on 4n splits into two shifted products")
    V("F10", 2, 3, "F10 dies on odd indices past the first")

    claims = []
    for k, (kind, s1, a, b, s2, a2, b2, n_max, why) in enumerate(rows):
        if n_max is None:
            n_max = _default_nmax(max(a, a2 or 1))
        claims.append(ProgressionClaim(
            "c%03d" % (k + 1), kind, s1, a, b, s2, a2, b2, 2, n_max, why))
    return claims


def verify_claim(claim):
    """Check one claim for n in 0..n_max and report the outcome.

    The available window may fall short of the requested range, in which
    case everything below the shortfall is still checked and the report
    carries the first unreachable n.
    """
    m = claim.modulus
    cap = series_cap(m)
    sides = [(claim.series, claim.a, claim.b)]
    if claim.kind == "parityEqual":
        sides.append((claim.series2, claim.a2, claim.b2))
    elif claim.kind != "vanishing":
        raise ValueError("unknown claim kind %r" % claim.kind)
    loaded = []
    for name, a, b in sides:
        need = a * claim.n_max + b + 1
        loaded.append(series_for(name, min(need, cap), m))
    for n in range(claim.n_max + 1):
        vals = []
        for (name, a, b), s in zip(sides, loaded):
            i = a * n + b
            if i >= s.precision:
                return ClaimReport(claim, "insufficientPrecision", n, None, None)
            c = series.coeff(s, i)
            vals.append(c % m if m is not None else c)
        if claim.kind == "vanishing":
            if vals[0] != 0:
                return ClaimReport(claim, "refuted", n, vals[0], 0)
        elif vals[0] != vals[1]:
            return ClaimReport(claim, "refuted", n, vals[0], vals[1])
    return ClaimReport(claim, "verified", None, None, None)


def verify_claims(claims=None):
    if claims is None:
        claims = builtin_claims()
    return [verify_claim(c) for c in claims]


def _prefix(claim):
    if claim.kind == "parityEqual":
        token = "%s~%s" % (claim.series, claim.series2)
        maps = "%d %d %d %d" % (claim.a, claim.b, claim.a2, claim.b2)
    else:
        token = claim.series
        maps = "%d %d" % (claim.a, claim.b)
    modtext = "exact" if claim.modulus is None else str(claim.modulus)
    return "%s %s mod=%s nMax=%d kind=%s" % (
        token, maps, modtext, claim.n_max, claim.kind)


def claim_line(claim):
    return "%s # %s: %s" % (_prefix(claim), claim.id, claim.provenance)


def report_line(report):
    claim = report.claim
    extra = "status=%s" % report.status
    if report.status == "refuted":
        extra += " at_n=%d left=%s right=%s" % (
            report.at_n, report.left, report.right)
    elif report.status == "insufficientPrecision":
        extra += " at_n=%d" % report.at_n
    return "%s %s # %s: %s" % (_prefix(claim), extra, claim.id, claim.provenance)


def export_claims(claims=None):
    if claims is None:
        claims = builtin_claims()
    return "".join(claim_line(c) + "\n" for c in claims)


def density_profile(name, a, b, uppers, mod=2):
    """Fraction of n in 1..X whose coefficient at a*n+b dies mod `mod`.

    uppers is a list of cutoffs X; one point is returned per cutoff, and
    the counting is shared so ascending cutoffs cost one pass.
    """
    uppers = sorted(uppers)
    if not uppers or uppers[0] < 1:
        raise ValueError("cutoffs must be positive")
    s = series_for(name, a * uppers[-1] + b + 1, mod)
    points = []
    count = 0
    n = 1
    for x in uppers:
        while n <= x:
            c = series.coeff(s, a * n + b)
            if (c % mod if mod is not None else c) == 0:
                count += 1
            n += 1
        points.append(DensityPoint(x, count, Fraction(count, x)))
    return points


def decimal_string(value, places=6):
    """Round a nonnegative Fraction half-up to fixed decimal places."""
    num, den = value.numerator, value.denominator
    if num < 0:
        raise ValueError("value must be nonnegative")
    scaled = (num * 10**places + den // 2) // den
    if places < 1:
        return str(scaled)
    whole, frac = divmod(scaled, 10**places)
    return "%d.%0*d" % (whole, places, frac)


def scan_progressions(name, a_max, n_max=200, mod=2, a_step=1, b_step=1, b_res=0):
    """List progressions a*n+b, b < a, whose coefficients all die mod `mod`.

    Steps over a in multiples of a_step up to a_max and b in the residue
    class b_res mod b_step; results come out sorted by a then b.
    """
    if a_max < 1 or n_max < 0:
        raise ValueError("bad scan range")
    s = series_for(name, a_max * (n_max + 1), mod)
    hits = []
    for a in range(a_step, a_max + 1, a_step):
        for b in range(b_res % b_step, a, b_step):
            good = True
            for n in range(n_max + 1):
                c = series.coeff(s, a * n + b)
                if (c % mod if mod is not None else c) != 0:
                    good = False
                    break
            if good:
                hits.append(ScanHit(a, b, n_max))
    return hits
