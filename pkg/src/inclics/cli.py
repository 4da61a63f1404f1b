"""Command line interface: ``inclics {hilbert,alpha,star,galaxy,verify}``.

Exit codes: 0 ok, 1 usage, 2 validation failure, 3 verification mismatch,
4 degree cap exhaustion.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .documents import DocumentError, InclicValidationError, format_rational, parse_scheme
from .exact_arith import ambient_hilbert
from .families import random_inclic_family
from .hf_engine import (DescentViolation, RecursiveProvider, alpha_descent_check, alpha_inclic,
                        hf_inclic, provider_alpha)
from .oracle import DEFAULT_CAP, NotFoundBelowCap, oracle_alpha, oracle_hilbert, oracle_reg_points
from .scheme_core import InclicScheme, SchemeError
from .star_galaxy import GalaxyParams, build_star, verify_galaxy_chain, waldschmidt

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_MISMATCH, EXIT_CAP = 0, 1, 2, 3, 4

SUITES = {"small": dict(count=10, t_max=6), "full": dict(count=50, t_max=10)}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cell(v, fmt="csv"):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, bool):
        return v if fmt == "json" else ("true" if v else "false")
    if isinstance(v, NotFoundBelowCap):
        return f"not-found<={v.cap}"
    if isinstance(v, (list, tuple)):
        return " ".join(str(_cell(x)) for x in v)
    return v


def write_table(rows: list[dict], fmt: str, out, float_cols: tuple[str, ...] = ()):
    """Emit rows as CSV (header first) or as a JSON list; rationals as "p/q"."""
    rows = [dict(r) for r in rows]
    for r in rows:
        for col in float_cols:
            if isinstance(r.get(col), Fraction):
                r[col + "_float"] = float(r[col])
    cells = [{k: _cell(v, fmt) for k, v in r.items()} for r in rows]
    if fmt == "json":
        out.write(json.dumps(cells, indent=2) + "\n")
        return
    if not cells:
        return
    w = csv.DictWriter(out, fieldnames=list(cells[0].keys()), lineterminator="\n")
    w.writeheader()
    w.writerows(cells)


def _load(path: str):
    with open(path) as fh:
        return parse_scheme(fh.read())


def cmd_hilbert(args, out) -> int:
    scheme = _load(args.scheme)
    fat = scheme.to_fat_scheme() if isinstance(scheme, InclicScheme) else scheme
    n = fat.ambient_dim
    provider = RecursiveProvider()

    def by_recursion(t):
        if isinstance(scheme, InclicScheme):
            return hf_inclic(scheme, t, provider)
        return provider.hilbert(fat, t)

    rows, mismatch = [], False
    for t in range(args.t_min, args.t_max + 1):
        h = oracle_hilbert(fat, t) if args.method == "oracle" else by_recursion(t)
        row = {"t": t, "h_ideal": h}
        row["h_scheme"] = ambient_hilbert(n, t) - h
        if args.method == "both":
            o = oracle_hilbert(fat, t)
            row["h_oracle"] = o
            row["match"] = o == h
            mismatch |= o != h
        rows.append(row)
    write_table(rows, args.format, out)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_alpha(args, out) -> int:
    scheme = _load(args.scheme)
    if isinstance(scheme, InclicScheme):
        res = alpha_inclic(scheme, RecursiveProvider())
        capped = res.alpha > args.cap
        row = {"alpha": res.alpha if not capped else NotFoundBelowCap(args.cap),
               "d": res.d, "l_prime": res.l_prime, "lower_bound": res.lower_bound,
               "upper_bound": res.upper_bound, "exact": res.exact}
    else:
        a = provider_alpha(RecursiveProvider(), scheme, args.cap)
        capped = isinstance(a, NotFoundBelowCap)
        row = {"alpha": a}
    write_table([row], args.format, out)
    return EXIT_CAP if capped else EXIT_OK


def cmd_star(args, out) -> int:
    star = build_star(args.n, args.e, args.u)
    A = star.scheme()
    alpha_A = oracle_alpha(A, args.cap)
    rows = [{"quantity": "components", "value": len(star.components),
             "expected": len(star.subsets), "ok": True},
            {"quantity": "alpha(A)", "value": alpha_A, "expected": args.u - args.e + 1,
             "ok": alpha_A == args.u - args.e + 1}]
    for r in args.r or []:
        expected = r * args.u
        if expected > args.cap:
            val = NotFoundBelowCap(args.cap)
        else:
            val = oracle_alpha(star.scheme(r * args.e), args.cap)
        rows.append({"quantity": f"alpha({r * args.e}A)", "value": val,
                     "expected": expected, "ok": val == expected})
    if args.e == args.n:
        reg = oracle_reg_points(A)
        rows.append({"quantity": "reg(I_A)", "value": reg, "expected": args.u - args.n + 1,
                     "ok": reg == args.u - args.n + 1})
    write_table(rows, args.format, out)
    if any(isinstance(r["value"], NotFoundBelowCap) for r in rows):
        return EXIT_CAP
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_MISMATCH


def cmd_galaxy(args, out) -> int:
    params = GalaxyParams(args.n, args.N, args.e, args.u)
    rs = args.r or [1]
    rep = waldschmidt(params, rs)
    rows = []
    status = EXIT_OK
    for r in rs:
        row = {"r": r, "gamma": rep.gamma, "a_sequence": rep.alpha_sequences[r],
               "ratio": rep.ratios[r][-1], "rho_lower": rep.rho_lower,
               "rho_upper": rep.rho_upper, "upper_kind": rep.upper_kind}
        if args.verify:
            steps = verify_galaxy_chain(params, r, degree_cap=args.cap)
            row["chain_verified"] = all(s.ok for s in steps)
            if any(s.capped for s in steps):
                status = max(status, EXIT_CAP)
                row["chain_verified"] = False
            elif not row["chain_verified"]:
                status = EXIT_MISMATCH
        rows.append(row)
    write_table(rows, args.format, out,
                float_cols=("gamma", "ratio", "rho_lower", "rho_upper") if args.float else ())
    return status


def cmd_verify(args, out) -> int:
    suite = SUITES[args.suite]
    seed = args.seed
    print(f"# suite={args.suite} seed={seed}", file=sys.stderr)
    rows, bad = [], 0
    for idx, X in enumerate(random_inclic_family(seed, suite["count"])):
        start = time.perf_counter()
        provider = RecursiveProvider()
        fat = X.to_fat_scheme()
        ok = all(hf_inclic(X, t, provider) == oracle_hilbert(fat, t)
                 for t in range(suite["t_max"] + 1))
        res = alpha_inclic(X, provider)
        ok &= res.alpha == oracle_alpha(fat, max(DEFAULT_CAP, res.upper_bound))
        ok &= res.lower_bound <= res.alpha <= res.upper_bound
        try:
            alpha_descent_check(X, provider)
        except DescentViolation as exc:
            print(f"# scheme {idx}: {exc}", file=sys.stderr)
            ok = False
        bad += not ok
        rows.append({"index": idx, "n": X.ambient_dim, "k": X.k, "components": len(fat.components),
                     "alpha": res.alpha, "match": ok,
                     "seconds": f"{time.perf_counter() - start:.3f}"})
    write_table(rows, args.format, out)
    return EXIT_MISMATCH if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="inclics", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=["csv", "json"], default="csv")

    h = sub.add_parser("hilbert", help="Hilbert function table of a scheme document")
    h.add_argument("--scheme", required=True)
    h.add_argument("--t-min", type=int, default=0)
    h.add_argument("--t-max", type=int, required=True)
    h.add_argument("--method", choices=["recursion", "oracle", "both"], default="recursion")
    fmt(h)

    a = sub.add_parser("alpha", help="initial degree of a scheme document")
    a.add_argument("--scheme", required=True)
    a.add_argument("--cap", type=int, default=DEFAULT_CAP)
    fmt(a)

    s = sub.add_parser("star", help="star configuration checks")
    for name in ("--n", "--e", "--u"):
        s.add_argument(name, type=int, required=True)
    s.add_argument("--r", type=int, action="append")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    fmt(s)

    g = sub.add_parser("galaxy", help="Waldschmidt constant and resurgence bounds of a galaxy")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--N", type=int, required=True)
    g.add_argument("--e", type=int, required=True)
    g.add_argument("--u", type=int, required=True)
    g.add_argument("--r", type=int, action="append")
    g.add_argument("--verify", action="store_true", help="also check the alpha chain")
    g.add_argument("--cap", type=int, default=DEFAULT_CAP)
    g.add_argument("--float", action="store_true", help="add decimal convenience columns")
    fmt(g)

    v = sub.add_parser("verify", help="recursion vs oracle on seeded random inclics")
    v.add_argument("--suite", choices=sorted(SUITES), default="small")
    v.add_argument("--seed", type=int, default=2013)
    fmt(v)
    return p


COMMANDS = {"hilbert": cmd_hilbert, "alpha": cmd_alpha, "star": cmd_star,
            "galaxy": cmd_galaxy, "verify": cmd_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except InclicValidationError as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DocumentError, SchemeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv=None) -> str:
    """Run the CLI and return its stdout (for notebooks and tests)."""
    buf = io.StringIO()
    main(argv, buf)
    return buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
