"""Command line front end.

Every subcommand prints deterministic text to stdout and mirrors it to
--out FILE when given.  Exit codes: 0 when everything asked for checks
out, 1 when a checked claim or identity is refuted, 2 for usage or
input errors, 3 when a request needs more precision than is reachable.
"""

import argparse
import sys

from . import claims, dissect, dsl, eta, hecke, series
from .series import PrecisionError


def _source_series(args, prec):
    """Laurent expansion of --series NAME or --expr TEXT at exactly prec."""
    if args.expr is not None:
        return dsl.evaluate(dsl.parse(args.expr), prec, args.mod).as_laurent()
    return series.truncate(claims.series_for(args.series, prec, args.mod), prec)


def _cmd_expand(args):
    return 0, series.format_series(_source_series(args, args.prec))


def _cmd_coeff(args):
    s = _source_series(args, max(2, args.n + 2))
    return 0, "%d\n" % series.coeff(s, args.n)


def _cmd_verify(args):
    catalog = claims.builtin_claims()
    if args.claim is not None:
        catalog = [c for c in catalog if c.id == args.claim]
        if not catalog:
            raise ValueError("unknown claim id %r" % args.claim)
    if args.nmax is not None:
        catalog = [c._replace(n_max=args.nmax) for c in catalog]
    reports = [claims.verify_claim(c) for c in catalog]
    text = "".join(claims.report_line(r) + "\n" for r in reports)
    statuses = {r.status for r in reports}
    if "refuted" in statuses:
        return 1, text
    if "insufficientPrecision" in statuses:
        return 3, text
    return 0, text


def _cmd_dissect(args):
    ids = (args.id,) if args.id is not None else dissect.identity_ids()
    lines = []
    bad = False
    for identity_id in ids:
        res = dissect.verify(identity_id, args.prec)
        modtext = "exact" if res.modulus is None else str(res.modulus)
        line = "%s mod=%s prec=%d status=%s" % (
            res.identity_id, modtext, res.prec, "ok" if res.ok else "mismatch")
        if not res.ok:
            bad = True
            line += " exponent=%d left=%s right=%s" % (
                res.exponent, res.left, res.right)
        lines.append(line)
    return (1 if bad else 0), "".join(line + "\n" for line in lines)


def _cmd_density(args):
    uppers = [int(token) for token in args.X.split(",") if token.strip()]
    points = claims.density_profile(args.series, args.A, args.B, uppers,
                                    args.mod)
    lines = ["%d\t%s\t%s" % (p.upper, p.fraction,
                             claims.decimal_string(p.fraction))
             for p in points]
    return 0, "".join(line + "\n" for line in lines)


def _cmd_cusps(args):
    quot = eta.parse_quotient(args.eta)
    rep = eta.ligozat_check(quot)
    hol = eta.holomorphy_report(quot)
    lines = [
        "level=%d weight=%s" % (quot.level, rep.weight),
        "sum_delta_r=%d sum_level_over_delta_r=%d "
        "cond24_upper=%s cond24_lower=%s" % (
            rep.sum_delta_r, rep.sum_level_over_delta_r,
            rep.cond24_upper, rep.cond24_lower),
        "character_value=%s character_kernel=%s" % (
            rep.character_value, rep.character_kernel),
    ]
    for order in hol.orders:
        lines.append("cusp c=%d d=%d order=%s" % (order.c, order.d, order.order))
    lines.append("holomorphic=%s cuspidal=%s" % (
        hol.is_holomorphic, hol.is_cuspidal))
    return 0, "".join(line + "\n" for line in lines)


def _cmd_hecke(args):
    quot = eta.parse_quotient(args.eta)
    ctx = hecke.context_for_quotient(quot)
    s = eta.expand_quotient(quot, args.prec).as_laurent()
    if args.check_eigen:
        rep = hecke.eigen_lambda(s, args.p, ctx)
        line = "p=%d lambda=%d residuals=%d checked_below=%d\n" % (
            rep.p, rep.value, len(rep.residuals), rep.checked_below)
        return (1 if rep.residuals else 0), line
    return 0, series.format_series(hecke.hecke_Tp(s, args.p, ctx))


def _cmd_scan(args):
    hits = claims.scan_progressions(
        args.series, args.Amax, n_max=args.nmax, mod=args.mod,
        a_step=args.Amod, b_step=args.Amod, b_res=args.Bmod)
    lines = ["%s %d %d mod=%d nMax=%d kind=vanishing # candidate" % (
        args.series, hit.a, hit.b, args.mod, hit.n_checked) for hit in hits]
    return 0, "".join(line + "\n" for line in lines)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="etaq",
        description="Expand, check, and survey eta quotient q-series.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command")

    def command(name, helptext):
        p = sub.add_parser(name, help=helptext, description=helptext)
        p.add_argument("--out", metavar="FILE",
                       help="also write the output to this file")
        return p

    p = command("expand", "print an expansion as a window header plus "
                          "one line per nonzero term")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--series", help="catalog name such as j6 or F10s")
    group.add_argument("--expr", help="eta/poch expression text")
    p.add_argument("--prec", type=int, required=True, help="window precision")
    p.add_argument("--mod", type=int, help="reduce coefficients modulo this")
    p.set_defaults(func=_cmd_expand)

    p = command("coeff", "print a single coefficient")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--series", help="catalog name such as j6 or F10s")
    group.add_argument("--expr", help="eta/poch expression text")
    p.add_argument("--n", type=int, required=True, help="exponent to read")
    p.add_argument("--mod", type=int, help="reduce the coefficient modulo this")
    p.set_defaults(func=_cmd_coeff)

    p = command("verify", "check built-in arithmetic progression claims")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--claim", metavar="ID", help="check this claim only")
    group.add_argument("--all", action="store_true",
                       help="check every claim (the default)")
    p.add_argument("--nmax", type=int, help="override the checked range")
    p.set_defaults(func=_cmd_verify)

    p = command("dissect", "check the dissection and binomial identities")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--id", metavar="ID", help="check this identity only")
    group.add_argument("--all", action="store_true",
                       help="check every identity (the default)")
    p.add_argument("--prec", type=int, required=True, help="window precision")
    p.set_defaults(func=_cmd_dissect)

    p = command("density", "profile how often coefficients vanish on a "
                           "progression A*n+B")
    p.add_argument("--series", required=True)
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--mod", type=int, default=2)
    p.add_argument("--X", required=True, help="comma separated cutoffs")
    p.set_defaults(func=_cmd_density)

    p = command("cusps", "modularity data for an eta quotient")
    p.add_argument("--eta", required=True, metavar="QUOTIENT",
                   help="quotient text such as 'N=128; 8^1 * 16^1'")
    p.set_defaults(func=_cmd_cusps)

    p = command("hecke", "apply T_p to an eta quotient, or test that it is "
                         "an eigenform")
    p.add_argument("--eta", required=True, metavar="QUOTIENT",
                   help="quotient text such as 'N=128; 8^1 * 16^1'")
    p.add_argument("--p", type=int, required=True, help="prime index of T_p")
    p.add_argument("--prec", type=int, default=200, help="window precision")
    p.add_argument("--check-eigen", action="store_true",
                   help="report the eigenvalue candidate and its residuals")
    p.set_defaults(func=_cmd_hecke)

    p = command("scan", "survey progressions whose coefficients all vanish")
    p.add_argument("--series", required=True)
    p.add_argument("--mod", type=int, default=2)
    p.add_argument("--Amod", type=int, default=1,
                   help="keep A in multiples of this")
    p.add_argument("--Bmod", type=int, default=0,
                   help="keep B in this residue class modulo Amod")
    p.add_argument("--Amax", type=int, required=True, help="largest A tried")
    p.add_argument("--nmax", type=int, default=200,
                   help="indices checked per progression")
    p.set_defaults(func=_cmd_scan)

    return parser


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except PrecisionError as exc:
        print("precision: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if text:
        sys.stdout.write(text)
    if args.out is not None:
        with open(args.out, "w") as handle:
            handle.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
