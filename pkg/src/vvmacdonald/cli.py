"""Command-line front end: ``vvmac <command> ...``.

Exit codes: 0 ok, 1 bad input, 2 non-generic parameters, 3 a verify suite
failed, 4 a singular certificate is invalid.  Set ``VVMAC_MEMO_MAX`` to cap
the number of Macdonald polynomials held in memory by one run.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bilinear_form import InvalidParameters, norm_table, positivity_classify, region_boundary_csv
from .combinatorics import format_composition, max_hook, parse_composition
from .qt_field import eval_point, is_generic_point
from .singular import SubstitutionPole, certify
from .tableaux import format_contents, select_tableau
from .verify import SUITES, run_suite
from .yang_baxter import MemoLimitExceeded, NonGenericParameters, YangBaxterBuilder, export_graph

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_NONGENERIC, EXIT_VERIFY, EXIT_CERT = 0, 1, 2, 3, 4


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def parse_shape(text: str) -> tuple:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"bad shape {text!r}") from None
    if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise InputError(f"shape {text!r} is not a partition")
    return parts


def parse_point(text: str) -> tuple:
    try:
        q0, t0 = (Fraction(x.strip()) for x in text.split(","))
    except ValueError:
        raise InputError(f"bad point {text!r}; expected q0,t0 as exact rationals") from None
    return q0, t0


def _memo_cap():
    raw = os.environ.get("VVMAC_MEMO_MAX")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"VVMAC_MEMO_MAX={raw!r} is not an integer") from None


def _emit(obj):
    obj = {"schema": SCHEMA, **obj}
    print(json.dumps(obj, indent=2, sort_keys=False))


# ---------------------------------------------------------------------------
# commands


def cmd_poly(args) -> int:
    shape = parse_shape(args.shape)
    N = sum(shape)
    alpha = parse_composition(args.comp)
    if len(alpha) != N:
        raise InputError(f"composition {args.comp} must have {N} parts for shape {args.shape}")
    S = select_tableau(shape, args.tableau)
    point = parse_point(args.point) if args.point else None
    if point is not None and not is_generic_point(*point, sum(alpha) + 1, N + max_hook(shape)):
        print(f"point q={point[0]}, t={point[1]} is not generic for degree {sum(alpha)}",
              file=sys.stderr)
        return EXIT_NONGENERIC
    b = YangBaxterBuilder(N, shape, point=point, max_nodes=_memo_cap())
    node = b.build(alpha, S)
    out = node.to_json_obj()
    out["eigencheck"] = b.check_eigen(node)
    if point is not None:
        out["point"] = [str(point[0]), str(point[1])]
        out["M_at_point"] = [
            {"x": list(e), "vector": {format_contents(b.H.tableaux[k].contents): str(eval_point(c, *point))
                                      for k, c in sorted(v.items())}}
            for e, v in node.M.sorted_terms()
        ]
    if args.format == "text":
        print(f"M[({format_composition(alpha)}); S = {S}] = {node.M}")
        print("zeta = [" + ", ".join(out["zeta"]) + "]")
        print(f"eta = {out['eta']}   R = {out['R']}   eigencheck = {out['eigencheck']}")
    else:
        _emit({"command": "poly", "shape": list(shape), "node": out})
    return EXIT_OK


def cmd_verify(args) -> int:
    shape = parse_shape(args.shape)
    names = SUITES if args.suite == "all" else (args.suite,)
    results = [run_suite(n, shape, args.max_degree, args.degree) for n in names]
    if args.format == "text":
        for r in results:
            print(f"{r.name:10s} {'pass' if r.ok else 'FAIL'} ({r.checked} checks)")
            for f in r.failures[:20]:
                print(f"    {f}")
    else:
        _emit({"command": "verify", "shape": list(shape),
               "suites": [r.to_json_obj() for r in results]})
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def cmd_norms(args) -> int:
    shape = parse_shape(args.shape)
    point = parse_point(args.point) if args.point else None
    rows = norm_table(sum(shape), shape, args.max_degree, point)
    table = [{"alpha": list(a), "tableau": format_contents(S.contents), "norm": str(v)}
             for a, S, v in rows]
    if args.format == "text":
        for r in table:
            print(f"({format_composition(r['alpha'])})  {r['tableau']:>16s}  {r['norm']}")
    else:
        out = {"command": "norms", "shape": list(shape), "max_degree": args.max_degree}
        if point is not None:
            out["point"] = [str(point[0]), str(point[1])]
        _emit({**out, "norms": table})
    return EXIT_OK


def cmd_positivity(args) -> int:
    if args.boundary_csv:
        if args.h is None:
            if not args.shape:
                raise InputError("--boundary-csv needs --h or --shape")
            h = max_hook(parse_shape(args.shape))
        else:
            h = args.h
        sys.stdout.write(region_boundary_csv(h, samples=args.samples))
        return EXIT_OK
    if not (args.shape and args.point):
        raise InputError("classification needs --shape and --point")
    shape = parse_shape(args.shape)
    q0, t0 = parse_point(args.point)
    region = positivity_classify(q0, t0, shape)
    if args.format == "text":
        print(region)
    else:
        _emit({"command": "positivity", "shape": list(shape), "point": [str(q0), str(t0)],
               "h": max_hook(shape), "region": region})
    return EXIT_OK


def cmd_singular(args) -> int:
    shape = parse_shape(args.shape)
    families = ("S1", "S0") if args.family == "both" else (args.family,)
    certs = [certify(shape, f) for f in families]
    if args.format == "text":
        for c in certs:
            print(f"{c.tableau}: alpha=({format_composition(c.alpha)}) q=t^{c.exponent} "
                  f"{'valid' if c.valid else 'INVALID'}  residuals={[str(r) for r in c.residuals]}")
    else:
        _emit({"command": "singular", "certificates": [c.to_json_obj() for c in certs]})
    return EXIT_OK if all(c.valid for c in certs) else EXIT_CERT


def cmd_graph(args) -> int:
    sys.stdout.write(export_graph(parse_shape(args.shape), args.max_degree))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vvmac", description="Vector-valued nonsymmetric Macdonald polynomials.")
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("poly", help="build M_{alpha,S}")
    s.add_argument("--shape", required=True)
    s.add_argument("--comp", required=True)
    s.add_argument("--tableau", default="S0", help="S0, S1, an index, [contents] or rows")
    s.add_argument("--point", help="q0,t0 exact rationals")
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("verify", help="run invariant suites")
    s.add_argument("--shape", required=True)
    s.add_argument("--suite", choices=SUITES + ("all",), default="all")
    s.add_argument("--max-degree", type=int, default=2)
    s.add_argument("--degree", type=int, default=1, help="degree of f for the fdxg suite")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("norms", help="closed-form squared norms")
    s.add_argument("--shape", required=True)
    s.add_argument("--max-degree", type=int, default=2)
    s.add_argument("--point")
    s.set_defaults(func=cmd_norms)

    s = sub.add_parser("positivity", help="classify (q,t) or emit boundary CSV")
    s.add_argument("--shape")
    s.add_argument("--point")
    s.add_argument("--h", type=int)
    s.add_argument("--boundary-csv", action="store_true")
    s.add_argument("--samples", type=int, default=41)
    s.set_defaults(func=cmd_positivity)

    s = sub.add_parser("singular", help="certify the singular families")
    s.add_argument("--shape", required=True)
    s.add_argument("--family", choices=("S0", "S1", "both"), default="both")
    s.set_defaults(func=cmd_singular)

    s = sub.add_parser("graph", help="Yang-Baxter graph in DOT")
    s.add_argument("--shape", required=True)
    s.add_argument("--max-degree", type=int, default=2)
    s.set_defaults(func=cmd_graph)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonGenericParameters as exc:
        print(f"non-generic parameters: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC
    except SubstitutionPole as exc:
        print(f"certificate failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    except (InputError, InvalidParameters, ValueError, IndexError, MemoLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
