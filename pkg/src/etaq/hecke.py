"""Kronecker symbols, primality, and Hecke operators on q-expansions."""

from collections import namedtuple

from . import eta
from .series import PrecisionError, Series, coeff

__all__ = [
    "kronecker", "is_prime", "CharacterSpec", "HeckeContext",
    "context_for_quotient", "hecke_Tp", "eigen_lambda",
    "eigen_vanishing_check", "EigenReport", "VanishingReport",
]


def kronecker(a, n):
    """Kronecker symbol (a | n), defined for all integers except (0 | 0)."""
    if n == 0:
        if a == 0:
            raise ValueError("(0 | 0) is undefined")
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # n is odd and positive: the Jacobi reciprocity loop
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin (the 12-base set covers beyond 3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class CharacterSpec(namedtuple("CharacterSpec", "discriminant")):
    """Real character d -> (discriminant | d)."""

    __slots__ = ()

    def value(self, d):
        return kronecker(self.discriminant, d)


HeckeContext = namedtuple("HeckeContext", "weight character level")


def context_for_quotient(f):
    """Weight/character/level context read off an eta quotient."""
    rep = eta.ligozat_check(f)
    if not rep.integral_weight:
        raise ValueError("quotient has non-integral weight %s" % (rep.weight,))
    if rep.character_value.denominator != 1:
        raise ValueError("character value %s is not an integer" % (rep.character_value,))
    return HeckeContext(int(rep.weight), CharacterSpec(int(rep.character_value)),
                        f.level)


def hecke_Tp(s, p, ctx):
    """Apply T_p: (T_p s)_n = s_{pn} + chi(p) p^(weight-1) s_{n/p}."""
    if s.valuation < 0:
        raise ValueError("T_p needs a series supported in nonnegative degrees")
    if not is_prime(p):
        raise ValueError("%d is not prime" % p)
    v = -(-s.valuation // p)
    prec = -(-s.precision // p)
    factor = ctx.character.value(p) * p ** (ctx.weight - 1)
    out = []
    for n in range(v, prec):
        x = coeff(s, p * n)
        if factor and n % p == 0:
            x += factor * coeff(s, n // p)
        out.append(x)
    return Series(v, out, prec)


EigenReport = namedtuple("EigenReport", "p value residuals checked_below")

VanishingReport = namedtuple("VanishingReport", "p nmax violations ok")


def eigen_lambda(s, p, ctx):
    """Eigenvalue candidate lambda(p) = (T_p s)_1 for s normalized to s_1 = 1.

    residuals lists every n below the T_p window where (T_p s)_n
    differs from lambda(p) * s_n.
    """
    if coeff(s, 1) != 1:
        raise ValueError("series is not normalized: coefficient of q is %r"
                         % (coeff(s, 1),))
    t = hecke_Tp(s, p, ctx)
    lam = coeff(t, 1)
    residuals = []
    for n in range(t.valuation, t.precision):
        got = coeff(t, n)
        want = lam * coeff(s, n)
        if got != want:
            residuals.append((n, got, want))
    return EigenReport(p, lam, residuals, t.precision)


def eigen_vanishing_check(s, p, ctx, nmax):
    """Consequences of lambda(p) = 0, checked for all n <= nmax.

    With a vanishing eigenvalue, s_{p^2 n + p r} = 0 for 0 < r < p and
    s_{p^2 n} + chi(p) p^(weight-1) s_n = 0.
    """
    rep = eigen_lambda(s, p, ctx)
    if rep.value != 0:
        raise ValueError("lambda(%d) = %d is nonzero" % (p, rep.value))
    need = p * p * nmax + p * (p - 1) + 1
    if s.precision < need:
        raise PrecisionError(
            "vanishing check to nmax=%d needs precision %d, have %d"
            % (nmax, need, s.precision))
    factor = ctx.character.value(p) * p ** (ctx.weight - 1)
    violations = []
    for n in range(nmax + 1):
        for r in range(1, p):
            idx = p * p * n + p * r
            val = coeff(s, idx)
            if val != 0:
                violations.append((idx, val, "inner"))
        val = coeff(s, p * p * n) + factor * coeff(s, n)
        if val != 0:
            violations.append((p * p * n, val, "recurrence"))
    return VanishingReport(p, nmax, violations, not violations)
