"""Command-line front end with exact-rational structured output.

Every subcommand emits one JSON document (CSV for flat tables on request)
wrapping the command name, its parameters and the payload.  Rationals are
serialized losslessly as "numerator/denominator" strings, integers without
the "/1"; polynomial coefficients are keyed by exponent tuples "a,b,c,d"
over (L2, LK, K2, c2).  Output is byte-identical across runs for identical
inputs.

Exit codes: 0 success (and exact equality for the comparison commands),
1 mathematical mismatch, 2 usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import inclexcl, nodal
from .chern import parse_surface, rr_example_pairs, solve_rr_coefficients
from .modular import ModularCatalog
from .nodal import MAX_DELTA


class UsageError(Exception):
    pass


# -- serialization -----------------------------------------------------------

def fmt_rational(x):
    """Lossless "num/den" string; integers drop the denominator."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s):
    return Fraction(s)


def fmt_series(series):
    return [fmt_rational(c) for c in series]


def fmt_poly(poly):
    return {",".join(str(e) for e in exps): fmt_rational(c)
            for exps, c in poly.sorted_terms()}


def fmt_surface(s):
    return {"name": s.name, "L2": s.L2, "LK": s.LK, "K2": s.K2, "c2": s.c2}


def emit_json(doc, out):
    out.write(json.dumps(doc, indent=2, sort_keys=True))
    out.write("\n")


def emit_csv(header, rows, out):
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(str(v) for v in row) + "\n")


def document(command, parameters, order, fmt, payload):
    return {"command": command, "parameters": parameters, "order": order,
            "format": fmt, "payload": payload}


def _check_delta(value, what="delta"):
    if value < 0 or value > MAX_DELTA:
        raise UsageError(
            f"{what} {value} is out of range: the B1/B2 series data stop at "
            f"q^{MAX_DELTA}, so at most {what} {MAX_DELTA} is computable")


def _parse_surface_arg(spec):
    try:
        return parse_surface(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# -- subcommand handlers ------------------------------------------------------

def cmd_node_polys(args, out):
    _check_delta(args.max_delta, "max-delta")
    table = nodal.node_polynomials(args.max_delta)
    payload = {str(d): fmt_poly(table[d]) for d in range(args.max_delta + 1)}
    emit_json(document("node-polys", {"max_delta": args.max_delta},
                       args.max_delta, "json", payload), out)
    return 0


def cmd_count(args, out):
    _check_delta(args.delta)
    surface = _parse_surface_arg(args.surface)
    result = nodal.count_nodal(surface, args.delta)
    payload = {
        "surface": fmt_surface(surface),
        "delta": args.delta,
        "count": fmt_rational(result.value),
        "validity": result.validity,
        "chi_L": surface.chi_L(),
        "dim_linear_system": surface.dim_linear_system(),
    }
    emit_json(document("count", {"surface": args.surface, "delta": args.delta},
                       args.delta, "json", payload), out)
    return 0


def cmd_yau_zaslow(args, out):
    _check_delta(args.max_delta, "max-delta")
    report = nodal.yau_zaslow_check(args.max_delta)
    rows = [(r.delta, fmt_rational(r.node_value), fmt_rational(r.partition_value),
             r.equal) for r in report.rows]
    if args.format == "csv":
        emit_csv(("delta", "node_polynomial_value", "partition_coefficient",
                  "equal"), rows, out)
    else:
        payload = {
            "rows": [{"delta": d, "node_polynomial_value": lhs,
                      "partition_coefficient": rhs, "equal": eq}
                     for d, lhs, rhs, eq in rows],
            "all_equal": report.all_equal,
        }
        emit_json(document("yau-zaslow", {"max_delta": args.max_delta},
                           args.max_delta, args.format, payload), out)
    return 0 if report.all_equal else 1


def cmd_blowup_check(args, out):
    _check_delta(args.order, "order")
    surface = _parse_surface_arg(args.surface)
    check = nodal.blowup_identity_check(surface, args.order)
    payload = {
        "surface": fmt_surface(surface),
        "blowup": fmt_surface(surface.blowup()),
        "lhs": fmt_series(check.lhs),
        "rhs": fmt_series(check.rhs),
        "holds": check.holds,
    }
    emit_json(document("blowup-check",
                       {"surface": args.surface, "order": args.order},
                       args.order, "json", payload), out)
    return 0 if check.holds else 1


def cmd_rr_solve(args, out):
    pairs = rr_example_pairs()
    coeffs = solve_rr_coefficients(pairs)
    payload = {
        "A1": fmt_rational(coeffs.A1), "A2": fmt_rational(coeffs.A2),
        "A3": fmt_rational(coeffs.A3), "A4": fmt_rational(coeffs.A4),
        "catalog": [{"surface": fmt_surface(s), "chi": chi}
                    for s, chi in pairs],
    }
    emit_json(document("rr-solve", {}, None, "json", payload), out)
    return 0


def cmd_factorize(args, out):
    _check_delta(args.max_delta, "max-delta")
    form = nodal.factorize_generating_function(args.max_delta)
    table = nodal.node_polynomials(args.max_delta)
    reassembled = form.generating_function()
    ok = reassembled == table.generating_series()
    payload = {
        "log_A1": fmt_series(form.log_a1),
        "log_A2": fmt_series(form.log_a2),
        "log_A3": fmt_series(form.log_a3),
        "log_A4": fmt_series(form.log_a4),
        "exponents": {"A1": "K2", "A2": "c2", "A3": "L2", "A4": "LK"},
        "reassembly_exact": ok,
    }
    emit_json(document("factorize", {"max_delta": args.max_delta},
                       args.max_delta, "json", payload), out)
    return 0 if ok else 1


def cmd_inclexcl(args, out, stdin):
    try:
        data = json.load(stdin)
    except json.JSONDecodeError as exc:
        raise UsageError(f"stdin is not valid JSON: {exc}") from exc
    if (not isinstance(data, list)
            or not all(isinstance(s, list) for s in data)):
        raise UsageError("input must be a JSON list of integer lists")
    try:
        system = inclexcl.SetSystem(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    table = inclexcl.modified_cardinalities(system)
    keys = sorted(table, key=lambda i: (len(i), sorted(i)))
    rows = [(",".join(str(x) for x in sorted(i)), table[i][0], table[i][1])
            for i in keys]
    union = system.union()
    if args.format == "csv":
        emit_csv(("index_set", "cardinality", "modified_cardinality"),
                 ((f'"{ix}"', plain, mod) for ix, plain, mod in rows), out)
    else:
        payload = {
            "table": [{"index_set": ix, "cardinality": plain,
                       "modified_cardinality": mod}
                      for ix, plain, mod in rows],
            "union_size": len(union),
            "union_via_modified": inclexcl.union_via_modified(system),
            "union_via_alternating": inclexcl.union_via_alternating(system),
        }
        emit_json(document("inclexcl", {"k": system.k}, None, args.format,
                           payload), out)
    return 0


def cmd_series(args, out):
    name = args.name.upper()
    if name in ("B1", "B2"):
        if args.order > MAX_DELTA:
            raise UsageError(
                f"{name} is known only to q^{MAX_DELTA}: requesting order "
                f"{args.order} exceeds the available data")
        series = nodal.b1_series(args.order) if name == "B1" \
            else nodal.b2_series(args.order)
    else:
        try:
            series = ModularCatalog(max(args.order, 1)).get(name)
        except KeyError as exc:
            raise UsageError(str(exc)) from exc
        series = series.truncate(args.order)
    if args.format == "csv":
        emit_csv(("k", "coefficient"),
                 ((k, fmt_rational(c)) for k, c in enumerate(series)), out)
    else:
        emit_json(document("series", {"name": args.name, "order": args.order},
                           args.order, "json", fmt_series(series)), out)
    return 0


# -- parser -------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="nodepoly",
        description="Exact node-polynomial computations for algebraic "
                    "surfaces (all output is exact rational arithmetic).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("node-polys",
                       help="emit the universal node polynomials T_0..T_delta")
    p.add_argument("--max-delta", type=int, default=MAX_DELTA)

    p = sub.add_parser("count",
                       help="evaluate a node polynomial on a surface")
    p.add_argument("--surface", required=True,
                   help="P2:d, K3:l2, T4:l2 or explicit L2,LK,K2,c2")
    p.add_argument("--delta", type=int, required=True)

    p = sub.add_parser("yau-zaslow",
                       help="compare K3 counts with the partition power")
    p.add_argument("--max-delta", type=int, default=MAX_DELTA)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("blowup-check",
                       help="verify the one-point blowup identity")
    p.add_argument("--surface", required=True)
    p.add_argument("--order", type=int, default=MAX_DELTA)

    sub.add_parser("rr-solve",
                   help="recover the Riemann-Roch coefficients from surfaces")

    p = sub.add_parser("factorize",
                       help="split log F into the four per-Chern-number series")
    p.add_argument("--max-delta", type=int, default=MAX_DELTA)

    p = sub.add_parser("inclexcl",
                       help="modified cardinalities of a set system "
                            "(JSON list of integer lists on stdin)")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("series",
                       help="emit a named q-expansion")
    p.add_argument("--name", required=True,
                   help="G2, DG2, D2G2, DELTA, B1, B2 or PARTITION_POWER(e)")
    p.add_argument("--order", type=int, default=MAX_DELTA)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


HANDLERS = {
    "node-polys": cmd_node_polys,
    "count": cmd_count,
    "yau-zaslow": cmd_yau_zaslow,
    "blowup-check": cmd_blowup_check,
    "rr-solve": cmd_rr_solve,
    "factorize": cmd_factorize,
    "series": cmd_series,
}


def run(argv=None, out=None, err=None, stdin=None):
    """Dispatch a command line; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    stdin = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        if args.command == "inclexcl":
            return cmd_inclexcl(args, out, stdin)
        return HANDLERS[args.command](args, out)
    except UsageError as exc:
        err.write(f"nodepoly: error: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"nodepoly: error: {exc}\n")
        return 2


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
