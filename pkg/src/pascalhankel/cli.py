"""Command-line entry point.

Verbs: matrix, verify, cf, seq, net.  Deterministic output for fixed
flags; exit status 0 on success, 1 on verification failure, 2 on usage
errors, 3 on internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import exact, families, laurent, net, sequences, verify


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pascalhankel",
        description="Exact-arithmetic lab for Pascal/Catalan-Hankel matrix "
                    "identities, continued fractions, and digital nets.")
    sub = parser.add_subparsers(dest="verb", required=True)

    m = sub.add_parser("matrix", help="build, print, and measure matrix windows")
    msub = m.add_subparsers(dest="action", required=True)
    for name in ("show", "det", "rank", "ldu"):
        ms = msub.add_parser(name)
        ms.add_argument("--family", required=True,
                        help="P1[:a=A], M1[:a=A], P2, M2, H1, H2")
        ms.add_argument("--n", type=int, required=True)
        ms.add_argument("--m", type=int, default=None)
        ms.add_argument("--k", type=int, default=0)
        if name == "show":
            ms.add_argument("--format", choices=("json", "csv"), default="csv")
        if name == "rank":
            ms.add_argument("--p", type=int, required=True)

    v = sub.add_parser("verify", help="run identity verifications")
    v.add_argument("identity", help="identity id or 'all'")
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--k-max", type=int, default=None)
    v.add_argument("--a-range", default=None,
                   help="LO:HI (write --a-range=-5:5 for negative bounds)")
    v.add_argument("--json", action="store_true")

    c = sub.add_parser("cf", help="continued fractions of Laurent series")
    csub = c.add_subparsers(dest="action", required=True)
    ce = csub.add_parser("expand")
    ce.add_argument("--series", choices=("L1", "L2"), required=True)
    ce.add_argument("--coeffs", type=int, required=True)
    ce.add_argument("--quotients", type=int, required=True)
    ce.add_argument("--json", action="store_true")

    s = sub.add_parser("seq", help="dump a sequence prefix")
    s.add_argument("kind", choices=sequences.SEQUENCE_KINDS)
    s.add_argument("--count", type=int, required=True)

    n = sub.add_parser("net", help="digital (t,s)-sequence tools")
    nsub = n.add_subparsers(dest="action", required=True)
    nt = nsub.add_parser("t-value")
    nt.add_argument("--p", type=int, required=True)
    nt.add_argument("--dims", required=True, help="comma-separated families")
    nt.add_argument("--m-max", type=int, required=True)
    nt.add_argument("--json", action="store_true")
    np_ = nsub.add_parser("points")
    np_.add_argument("--p", type=int, required=True)
    np_.add_argument("--dims", required=True)
    np_.add_argument("--m", type=int, required=True)
    np_.add_argument("--n", type=int, required=True)
    np_.add_argument("--format", choices=("csv",), default="csv")
    nd = nsub.add_parser("discrepancy")
    nd.add_argument("--input", required=True, help="points CSV, rationals as num/den")
    ns = nsub.add_parser("search")
    ns.add_argument("--p", type=int, default=3)
    ns.add_argument("--m-max", type=int, default=4)
    ns.add_argument("--candidates", choices=("m1", "random"), default="m1")
    ns.add_argument("--budget", type=int, required=True)
    ns.add_argument("--seed", type=int, default=0)
    ns.add_argument("--json", action="store_true")
    return parser


def _generating_set(p: int, dims: str) -> net.GeneratingSet:
    fams = tuple(families.parse_family(t) for t in dims.split(","))
    return net.GeneratingSet(p, fams)


def _cmd_matrix(args, out) -> int:
    fam = families.parse_family(args.family)
    w = families.window_of(fam, args.n, args.m, args.k)
    if args.action == "show":
        if args.format == "json":
            print(exact.to_json(w), file=out)
        else:
            print(exact.to_csv(w), file=out)
    elif args.action == "det":
        print(exact.determinant(w), file=out)
    elif args.action == "rank":
        print(exact.rank_mod_p(w, args.p), file=out)
    elif args.action == "ldu":
        factors = exact.ldu_decompose(w)
        print("L:", file=out)
        print(exact.to_csv(factors.L), file=out)
        print("D: " + ",".join(str(d) for d in factors.D), file=out)
        print("U:", file=out)
        print(exact.to_csv(factors.U), file=out)
    return 0


def _cmd_verify(args, out) -> int:
    options = {}
    if args.n_max is not None:
        options["n_max"] = args.n_max
    if args.k_max is not None:
        options["k_max"] = args.k_max
    if args.a_range is not None:
        lo, _, hi = args.a_range.partition(":")
        options["a_range"] = (int(lo), int(hi))
    if args.identity == "all":
        if options:
            raise ValueError("grid flags apply to single identities, not 'all'")
        reports = verify.run_all()
    else:
        if "a_range" in options and args.identity.startswith("group-law"):
            lo, hi = options.pop("a_range")
            options["pairs"] = [(a, b) for a in range(lo, hi + 1)
                                for b in range(lo, hi + 1)]
        elif "a_range" in options and args.identity == "det-m1a":
            lo, hi = options.pop("a_range")
            options["a_values"] = tuple(a for a in range(lo, hi + 1) if a != 0)
        reports = [verify.run_check(args.identity, **options)]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], default=str), file=out)
    else:
        for r in reports:
            print(r.summary(), file=out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_cf(args, out) -> int:
    series = laurent.build_L(args.series, args.coeffs)
    cf = laurent.cf_expand(series, args.quotients)
    quotients = [laurent.poly_str(q) for q in cf.partial_quotients]
    if args.json:
        print(json.dumps({
            "series": args.series,
            "integer_part": laurent.poly_str(cf.integer_part),
            "partial_quotients": quotients,
            "exhausted_precision": cf.exhausted_precision,
        }), file=out)
    else:
        print(f"integer part: {laurent.poly_str(cf.integer_part)}", file=out)
        for i, q in enumerate(quotients, start=1):
            print(f"A_{i} = {q}", file=out)
        if cf.exhausted_precision:
            print("(precision exhausted)", file=out)
    return 0


def _cmd_seq(args, out) -> int:
    values = [str(sequences.value(args.kind, i)) for i in range(args.count)]
    print(json.dumps(values), file=out)
    return 0


def _cmd_net(args, out) -> int:
    if args.action == "t-value":
        gs = _generating_set(args.p, args.dims)
        ts = net.t_value(gs, args.m_max)
        if args.json:
            print(json.dumps({"p": args.p, "dims": args.dims,
                              "t_per_m": ts, "t": max(ts)}), file=out)
        else:
            print("m: " + " ".join(str(m) for m in range(1, args.m_max + 1)), file=out)
            print("t: " + " ".join(str(t) for t in ts), file=out)
            print(f"overall t = {max(ts)}", file=out)
    elif args.action == "points":
        gs = _generating_set(args.p, args.dims)
        ps = net.digital_points(gs, args.n, args.m)
        for pt in ps.points:
            print(",".join(f"{x.numerator}/{x.denominator}" for x in pt), file=out)
    elif args.action == "discrepancy":
        with open(args.input) as fh:
            pts = []
            for line in fh:
                line = line.strip()
                if line:
                    pts.append(tuple(Fraction(tok) for tok in line.split(",")))
        if not pts:
            raise ValueError("no points in input")
        ps = net.PointSet(2, len(pts[0]), tuple(pts))
        print(net.star_discrepancy(ps), file=out)
    elif args.action == "search":
        results = net.search_third_matrix(args.p, args.m_max, args.candidates,
                                          args.budget, seed=args.seed)
        if args.json:
            print(json.dumps(results), file=out)
        else:
            for r in results:
                print(f"{r['candidate']}: t={r['t']} per-m={r['t_per_m']}", file=out)
    return 0


def run(argv, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.verb == "matrix":
            return _cmd_matrix(args, out)
        if args.verb == "verify":
            return _cmd_verify(args, out)
        if args.verb == "cf":
            return _cmd_cf(args, out)
        if args.verb == "seq":
            return _cmd_seq(args, out)
        if args.verb == "net":
            return _cmd_net(args, out)
        return 2
    except (ValueError, OSError, ArithmeticError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
