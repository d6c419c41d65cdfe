"""Command line front end: ``python -m quasiwreath <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .actions import act
from .group import ColoredPermutation, ResourceCapError
from .paths import basis_monomials, is_dyck, path_of, render_path
from .poly import format_monomial, monomials_of_degree, parse_poly

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _common(suppress: bool) -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand; the subcommand
    # copies must not reset values given before it
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable output", **kw)
    p.add_argument("--max-deg", type=int, help="degree horizon", **({"default": None} | kw))
    p.add_argument("--cap", type=int, help="element-count cap", **({"default": None} | kw))
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    parser = argparse.ArgumentParser(
        prog="quasiwreath",
        description="Super-coinvariants of the generalized symmetric group G(n,m).",
        parents=[_common(suppress=False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def nm(p, need_m=True):
        p.add_argument("--n", type=int, required=True)
        if need_m:
            p.add_argument("--m", type=int, required=True)

    nm(sub.add_parser("dim", parents=[common], help="dimension m^n C_n via the Dyck basis"))
    p = sub.add_parser("hilbert", parents=[common], help="graded dimensions")
    nm(p)
    p.add_argument("--method", choices=harness.ROUTES, default="basis")
    nm(sub.add_parser("basis", parents=[common], help="list the Dyck monomial basis"))
    nm(sub.add_parser("gb", parents=[common], help="reduced truncated Groebner basis"))
    p = sub.add_parser("act", parents=[common], help="act on a polynomial")
    p.add_argument("--element", required=True, help='e.g. "sigma=[3,1,2] colors=[1,0,1] m=3"')
    p.add_argument("--poly", required=True, help='e.g. "x1^2*x2"')
    p.add_argument("--action", choices=("quasi", "classical"), default="quasi")
    p = sub.add_parser("paths", parents=[common], help="vectors of degree <= n as lattice paths")
    nm(p, need_m=False)
    p.add_argument("--dyck-only", action="store_true")
    p.add_argument("--draw", action="store_true", help="ASCII picture of each path")
    nm(sub.add_parser("chevalley", parents=[common], help="classical coinvariants, m^n n!"))
    p = sub.add_parser("verify", parents=[common], help="cross-check all routes")
    nm(p)
    p.add_argument("--routes", nargs="+", choices=harness.ROUTES, default=None)
    return parser


def _cmd_dim(args, out):
    total = len(basis_monomials(args.n, args.m, args.cap))
    if args.json:
        out.write(json.dumps({"n": args.n, "m": args.m, "total": total}) + "\n")
    else:
        out.write(f"{total}\n")
    return EXIT_OK


def _cmd_hilbert(args, out):
    s = harness.hilbert_route(args.method, args.n, args.m, args.max_deg, args.cap)
    if args.json:
        rec = {"n": args.n, "m": args.m, "route": args.method, "series": list(s.coeffs), "total": s.total()}
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(s.format() + "\n")
    return EXIT_OK


def _cmd_basis(args, out):
    vecs = basis_monomials(args.n, args.m, args.cap)
    if args.json:
        out.write(json.dumps([list(v) for v in vecs]) + "\n")
    else:
        for v in vecs:
            out.write(format_monomial(v) + "\n")
    return EXIT_OK


def _cmd_gb(args, out):
    gb = harness.groebner_basis_for(args.n, args.m, args.max_deg)
    if args.json:
        out.write(gb.to_json() + "\n")
    else:
        out.write(gb.to_text() + "\n")
    return EXIT_OK


def _cmd_act(args, out):
    g = ColoredPermutation.parse(args.element)
    p = parse_poly(args.poly, g.n, g.m)
    out.write(str(act(args.action, g, p)) + "\n")
    return EXIT_OK


def _cmd_paths(args, out):
    vecs = []
    for d in range(args.n + 1):
        for nu in sorted(monomials_of_degree(args.n, d)):
            if args.dyck_only and not is_dyck(nu):
                continue
            vecs.append(nu)
    if args.json:
        out.write(
            json.dumps([{"vector": list(v), "dyck": is_dyck(v), "path": path_of(v)} for v in vecs])
            + "\n"
        )
        return EXIT_OK
    for v in vecs:
        kind = "dyck" if is_dyck(v) else "transdiagonal"
        out.write(f"{','.join(map(str, v))}  {path_of(v)}  {kind}\n")
        if args.draw:
            out.write(render_path(v) + "\n\n")
    return EXIT_OK


def _cmd_chevalley(args, out):
    series, horizon = harness.chevalley_series(args.n, args.m, args.max_deg)
    total = series.total()
    expected = harness.chevalley_expected(args.n, args.m)
    if args.json:
        rec = {"n": args.n, "m": args.m, "series": list(series.coeffs), "total": total,
               "expected": expected, "status": "PASS" if total == expected else "FAIL"}
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"{total}\n")
    return EXIT_OK if total == expected else EXIT_MISMATCH


def _cmd_verify(args, out):
    report = harness.run_verification(args.n, args.m, args.routes, args.max_deg, args.cap)
    out.write((report.to_json() if args.json else report.to_text()) + "\n")
    return EXIT_OK if report.status == "PASS" else EXIT_MISMATCH


COMMANDS = {
    "dim": _cmd_dim,
    "hilbert": _cmd_hilbert,
    "basis": _cmd_basis,
    "gb": _cmd_gb,
    "act": _cmd_act,
    "paths": _cmd_paths,
    "chevalley": _cmd_chevalley,
    "verify": _cmd_verify,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("n", "m"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            err.write(f"error: --{name} must be a positive integer\n")
            parser.print_usage(err)
            return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except ResourceCapError as exc:
        err.write(f"resource cap: {exc}\n")
        return EXIT_CAP
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
