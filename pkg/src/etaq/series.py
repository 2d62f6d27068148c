"""Truncated Laurent series with exact integer coefficients.

A value stores the coefficients of q^v, ..., q^(P-1) for a window
[v, P); reading at or past P raises PrecisionError, reading below v
gives 0.  Every operation contracts the window by the usual rules for
products of approximations and never extends it silently.  Large
convolutions are packed into big integers (Kronecker substitution) so
that gmpy2 performs the actual multiplication.
"""

import heapq
import re
from collections import namedtuple

import gmpy2

__all__ = [
    "PrecisionError", "Series", "CongruenceResult",
    "make_series", "coeff", "add", "sub", "scale", "shift", "add_const",
    "negate_odd", "truncate", "mul", "invert", "pow", "substitute_power",
    "extract_progression", "reduce_mod", "first_mismatch", "congruent_mod",
    "euler_series", "pochhammer", "format_series", "parse_series",
]


class PrecisionError(Exception):
    """A coefficient beyond the stored precision was required."""


class Series:
    """Integer series known on the exponent window [valuation, precision)."""

    __slots__ = ("valuation", "precision", "coeffs")

    def __init__(self, valuation, coeffs, precision):
        if precision - valuation != len(coeffs):
            raise ValueError(
                "window [%d, %d) does not fit %d coefficients"
                % (valuation, precision, len(coeffs)))
        self.valuation = valuation
        self.precision = precision
        self.coeffs = list(coeffs)

    def coeff(self, n):
        return coeff(self, n)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.precision != other.precision:
            return False
        for n in range(min(self.valuation, other.valuation), self.precision):
            if coeff(self, n) != coeff(other, n):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append("%d*q^%d" % (c, self.valuation + i))
            if len(terms) == 6:
                terms.append("...")
                break
        return "Series(v=%d, P=%d: %s)" % (
            self.valuation, self.precision, " + ".join(terms) or "0")


def make_series(valuation, coeffs, precision):
    """Wrap a dense coefficient list for the window [valuation, precision)."""
    return Series(valuation, coeffs, precision)


def coeff(s, n):
    """Coefficient of q^n: zero below the window, an error past it."""
    if n >= s.precision:
        raise PrecisionError(
            "coefficient of q^%d is not determined at precision %d"
            % (n, s.precision))
    if n < s.valuation:
        return 0
    return s.coeffs[n - s.valuation]


# ---------------------------------------------------------------------------
# convolution

_SCHOOLBOOK_CUTOFF = 64


def _convolve_schoolbook(a, b, out_len):
    out = [0] * out_len
    if sum(1 for x in a if x) > sum(1 for x in b if x):
        a, b = b, a
    for i, x in enumerate(a):
        if x == 0 or i >= out_len:
            continue
        top = min(len(b), out_len - i)
        for j in range(top):
            out[i + j] += x * b[j]
    return out


def _pack(c, nbytes, width):
    # negative entries are stored as their low `width` bits, with a unit
    # borrow marker one slot up so that the packed integer is exact
    mask = (1 << width) - 1
    n = len(c)
    buf = bytearray(n * nbytes)
    marks = None
    for i, x in enumerate(c):
        if x:
            buf[i * nbytes:(i + 1) * nbytes] = (x & mask).to_bytes(nbytes, "little")
            if x < 0:
                if marks is None:
                    marks = bytearray((n + 1) * nbytes)
                marks[(i + 1) * nbytes] = 1
    val = gmpy2.mpz(int.from_bytes(buf, "little"))
    if marks is not None:
        val -= gmpy2.mpz(int.from_bytes(marks, "little"))
    return val


def _convolve_packed(a, b, out_len):
    na, nb = len(a), len(b)
    bound = max(map(abs, a)) * max(map(abs, b)) * min(na, nb)
    signed = any(x < 0 for x in a) or any(x < 0 for x in b)
    bits = bound.bit_length() + (1 if signed else 0)
    nbytes = max(1, (bits + 7) // 8)
    width = 8 * nbytes
    prod = _pack(a, nbytes, width) * _pack(b, nbytes, width)
    total = na + nb - 1
    keep = min(out_len, total)
    if signed:
        half = 1 << (width - 1)
        # shift every digit into [0, 2^width) before slicing bytes
        prod += gmpy2.mpz(int.from_bytes(half.to_bytes(nbytes, "little") * total, "little"))
        raw = int(prod).to_bytes(total * nbytes, "little")
        out = [int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") - half
               for k in range(keep)]
    else:
        raw = int(prod).to_bytes(total * nbytes, "little")
        out = [int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little")
               for k in range(keep)]
    if out_len > total:
        out.extend([0] * (out_len - total))
    return out


def _convolve(a, b, out_len, mod=None):
    if out_len <= 0:
        return []
    if mod is not None:
        a = [x % mod for x in a]
        b = [x % mod for x in b]
    if not a or not b:
        return [0] * out_len
    sparse_a = sum(1 for x in a if x)
    sparse_b = sum(1 for x in b if x)
    if sparse_a == 0 or sparse_b == 0:
        return [0] * out_len
    if (out_len <= _SCHOOLBOOK_CUTOFF or min(len(a), len(b)) <= 8
            or min(sparse_a, sparse_b) <= 8):
        out = _convolve_schoolbook(a, b, out_len)
    else:
        out = _convolve_packed(a, b, out_len)
    if mod is not None:
        out = [x % mod for x in out]
    return out


# ---------------------------------------------------------------------------
# arithmetic

def add(s, t):
    """Sum on the shared window."""
    v = min(s.valuation, t.valuation)
    prec = min(s.precision, t.precision)
    n = prec - v
    a = ([0] * (s.valuation - v) + s.coeffs)[:n]
    b = ([0] * (t.valuation - v) + t.coeffs)[:n]
    return Series(v, [x + y for x, y in zip(a, b)], prec)


def sub(s, t):
    return add(s, scale(t, -1))


def scale(s, k):
    """Multiply by the exact integer k; the window is unchanged."""
    return Series(s.valuation, [k * c for c in s.coeffs], s.precision)


def shift(s, d):
    """Multiply by the exact monomial q^d; the window translates."""
    return Series(s.valuation + d, s.coeffs, s.precision + d)


def add_const(s, k):
    """Add the exact integer k at exponent zero."""
    if k == 0:
        return Series(s.valuation, s.coeffs, s.precision)
    if s.precision <= 0:
        raise PrecisionError(
            "constant term lies beyond precision %d" % s.precision)
    v = min(s.valuation, 0)
    c = [0] * (s.valuation - v) + s.coeffs
    c[-v] += k
    return Series(v, c, s.precision)


def negate_odd(s):
    """Substitute q -> -q: negate the coefficients at odd exponents."""
    v = s.valuation
    return Series(v, [-c if (v + i) & 1 else c for i, c in enumerate(s.coeffs)],
                  s.precision)


def truncate(s, prec):
    """Shrink the window to precision prec <= the current one."""
    if prec > s.precision:
        raise ValueError("cannot extend precision %d to %d" % (s.precision, prec))
    v = min(s.valuation, prec)
    return Series(v, s.coeffs[:prec - v], prec)


def mul(s, t, mod=None):
    """Product; the window contracts to min(Ps + vt, Pt + vs)."""
    v = s.valuation + t.valuation
    prec = min(s.precision + t.valuation, t.precision + s.valuation)
    return Series(v, _convolve(s.coeffs, t.coeffs, prec - v, mod), prec)


def _invert_unit(u, n, mod):
    # u[0] is +-1 (mod `mod` if given); Newton doubling t <- t(2 - ut)
    lead = u[0] if mod is None else u[0] % mod
    if (mod is None and lead == -1) or (mod is not None and lead == mod - 1 != 1):
        t = _invert_unit([-x for x in u], n, mod)
        return [-x % mod for x in t] if mod is not None else [-x for x in t]
    if mod == 2:
        # over GF(2), t(2 - ut) = u t^2 and squaring just spreads coefficients
        t = [1]
        k = 1
        while k < n:
            k2 = min(2 * k, n)
            spread = [0] * k2
            for i in range((k2 + 1) // 2):
                spread[2 * i] = t[i]
            t = _convolve(u[:k2], spread, k2, 2)
            k = k2
        return t
    t = [1]
    k = 1
    while k < n:
        k2 = min(2 * k, n)
        e = _convolve(u[:k2], t, k2, mod)
        r = [(-x) % mod if mod is not None else -x for x in e]
        r[0] = (2 - e[0]) % mod if mod is not None else 2 - e[0]
        t = _convolve(t, r, k2, mod)
        k = k2
    return t


def invert(s, mod=None):
    """Reciprocal; the lowest nonzero coefficient in the window must be +-1."""
    c = s.coeffs
    i = 0
    if mod is None:
        while i < len(c) and c[i] == 0:
            i += 1
    else:
        while i < len(c) and c[i] % mod == 0:
            i += 1
    if i == len(c):
        raise ValueError("series is zero within its precision; not invertible")
    lead = c[i] if mod is None else c[i] % mod
    if mod is None and lead not in (1, -1):
        raise ValueError("leading coefficient %d is not a unit" % lead)
    if mod is not None and lead not in (1, mod - 1):
        raise ValueError("leading coefficient %d is not +-1 mod %d" % (lead, mod))
    d = s.valuation + i
    u = c[i:]
    return Series(-d, _invert_unit(u, len(u), mod), s.precision - 2 * d)


def pow(s, k, mod=None):
    """k-th power under the repeated-product window; pow(s, 0) is 1."""
    if k == 0:
        n = s.precision - s.valuation
        return Series(0, [1] + [0] * (n - 1) if n > 0 else [], n)
    if k < 0:
        return pow(invert(s, mod), -k, mod)
    result = None
    base = s
    while True:
        if k & 1:
            result = base if result is None else mul(result, base, mod)
        k >>= 1
        if not k:
            return result
        base = mul(base, base, mod)


def substitute_power(s, k):
    """Replace q by q^k for k >= 1."""
    if k < 1:
        raise ValueError("substitution power must be >= 1, got %d" % k)
    if k == 1:
        return Series(s.valuation, s.coeffs, s.precision)
    prec = k * (s.precision - 1) + 1
    if not s.coeffs:
        return Series(prec, [], prec)
    v = k * s.valuation
    out = [0] * (prec - v)
    for i, c in enumerate(s.coeffs):
        out[k * i] = c
    return Series(v, out, prec)


def extract_progression(s, a, r):
    """The series whose q^n coefficient is the q^(a n + r) one of s."""
    if a < 1:
        raise ValueError("progression step must be >= 1, got %d" % a)
    if not 0 <= r < a:
        raise ValueError("residue %d outside [0, %d)" % (r, a))
    v = -((r - s.valuation) // a)
    prec = -((r - s.precision) // a)
    base = s.valuation
    return Series(v, [s.coeffs[a * n + r - base] for n in range(v, prec)], prec)


def reduce_mod(s, m):
    """Reduce every coefficient to its canonical residue mod m >= 2."""
    if m < 2:
        raise ValueError("modulus must be >= 2, got %d" % m)
    return Series(s.valuation, [c % m for c in s.coeffs], s.precision)


CongruenceResult = namedtuple("CongruenceResult", "agrees exponent left right")


def first_mismatch(s, t, up_to, mod=None):
    """Least exponent below up_to where s and t differ (mod m), or None."""
    if up_to > min(s.precision, t.precision):
        raise PrecisionError(
            "comparison up to %d exceeds precision %d"
            % (up_to, min(s.precision, t.precision)))
    for n in range(min(s.valuation, t.valuation), up_to):
        x = coeff(s, n)
        y = coeff(t, n)
        if mod is not None:
            x %= mod
            y %= mod
        if x != y:
            return n, x, y
    return None


def congruent_mod(s, t, m, up_to):
    """Compare residues mod m at every exponent below up_to."""
    if m < 2:
        raise ValueError("modulus must be >= 2, got %d" % m)
    hit = first_mismatch(s, t, up_to, m)
    if hit is None:
        return CongruenceResult(True, None, None, None)
    return CongruenceResult(False, *hit)


# ---------------------------------------------------------------------------
# Euler products

def euler_series(k, prec):
    """(q^k; q^k)_inf by the pentagonal number expansion."""
    if k < 1:
        raise ValueError("Euler index must be >= 1, got %d" % k)
    if prec < 1:
        raise ValueError("precision must be >= 1, got %d" % prec)
    c = [0] * prec
    c[0] = 1
    j = 1
    while True:
        e1 = k * j * (3 * j - 1) // 2
        if e1 >= prec:
            break
        sign = -1 if j & 1 else 1
        c[e1] = sign
        e2 = k * j * (3 * j + 1) // 2
        if e2 < prec:
            c[e2] = sign
        j += 1
    return Series(0, c, prec)


_DENSE_NNZ = 384


def _dict_mul(u, v, prec, mod):
    out = {}
    for e1, c1 in u.items():
        for e2, c2 in v.items():
            e = e1 + e2
            if e < prec:
                out[e] = out.get(e, 0) + c1 * c2
    if mod is not None:
        return {e: c % mod for e, c in out.items() if c % mod}
    return {e: c for e, c in out.items() if c}


def _densify(d, prec):
    c = [0] * min(prec, max(d) + 1)
    for e, v in d.items():
        c[e] = v
    return c


def _binomial_tree(exps, prec, mod):
    # product of (1 - q^e): factors merge as sparse maps, fewest terms
    # first, and a node graduates to a dense list once it fills in; the
    # dense survivors then merge shortest first, capped at prec
    neg = -1 if mod is None else mod - 1
    sparse = [(2, k, {0: 1, e: neg}) for k, e in enumerate(exps)]
    heapq.heapify(sparse)
    tick = len(exps)
    dense = []
    while len(sparse) > 1:
        _, _, u = heapq.heappop(sparse)
        _, _, v = heapq.heappop(sparse)
        w = _dict_mul(u, v, prec, mod)
        if len(w) > _DENSE_NNZ:
            dense.append(_densify(w, prec))
        else:
            heapq.heappush(sparse, (len(w), tick, w))
        tick += 1
    if sparse:
        dense.append(_densify(sparse[0][2], prec))
    heap = [(len(c), k, c) for k, c in enumerate(dense)]
    heapq.heapify(heap)
    tick = len(dense)
    while len(heap) > 1:
        _, _, x = heapq.heappop(heap)
        _, _, y = heapq.heappop(heap)
        z = _convolve(x, y, min(len(x) + len(y) - 1, prec), mod)
        heapq.heappush(heap, (len(z), tick, z))
        tick += 1
    return heap[0][2]


def pochhammer(a, b, prec, mod=None):
    """(q^a; q^b)_inf = prod_{j>=0} (1 - q^(a + j b))."""
    if a < 1 or b < 1:
        raise ValueError("pochhammer arguments must be >= 1")
    if prec < 1:
        raise ValueError("precision must be >= 1, got %d" % prec)
    exps = list(range(a, prec, b))
    if not exps:
        return Series(0, [1] + [0] * (prec - 1), prec)
    c = _binomial_tree(exps, prec, mod)
    c.extend([0] * (prec - len(c)))
    return Series(0, c, prec)


# ---------------------------------------------------------------------------
# text form

_HEADER_RE = re.compile(r"v=(-?\d+) P=(-?\d+)\Z")
_TERM_RE = re.compile(r"(-?\d+)\t(-?\d+)\Z")


def format_series(s):
    """Render as a window header line plus one line per nonzero term."""
    lines = ["v=%d P=%d" % (s.valuation, s.precision)]
    for i, c in enumerate(s.coeffs):
        if c:
            lines.append("%d\t%d" % (s.valuation + i, c))
    return "\n".join(lines) + "\n"


def parse_series(text):
    """Inverse of format_series."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty series text")
    m = _HEADER_RE.match(lines[0])
    if not m:
        raise ValueError("bad series header: %r" % lines[0])
    v, prec = int(m.group(1)), int(m.group(2))
    if prec < v:
        raise ValueError("precision %d below valuation %d" % (prec, v))
    c = [0] * (prec - v)
    for ln in lines[1:]:
        m = _TERM_RE.match(ln)
        if not m:
            raise ValueError("bad term line: %r" % ln)
        n, val = int(m.group(1)), int(m.group(2))
        if not v <= n < prec:
            raise ValueError("exponent %d outside window [%d, %d)" % (n, v, prec))
        c[n - v] = val
    return Series(v, c, prec)
