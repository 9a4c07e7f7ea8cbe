"""Command line front end.

    curvepoincare diagram   -f "y^5 + x*y^2 + x^2*y + x^5"
    curvepoincare poincare  -f "y^2 + x^3" --max-degree 8 --check
    curvepoincare valuate   -f "x + y" -g "x" --which vdoubleprime --oracle
    curvepoincare alexander -f '{"vertices": [[0,4],[2,2],[4,1]]}'
    curvepoincare verify    --suite identity --degree 20 --diagrams 25

Germs are polynomials (truncations of power series); order-function values
are certified only below the reduction cap and reported as ``>=cap`` above
it.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .alexander import (
    alexander_delta,
    alexander_multilink,
    quasihomogeneous_poincare,
    reduced_poincare,
    transpose_involution,
)
from .newton import (
    DiagramError,
    NewtonDiagram,
    NoFacetsError,
    exponent_matrix,
    germ_diagram,
    reduced_matrix_is_symmetric,
)
from .poly import PolySyntaxError, format_poly, parse_poly
from .series import enumeration_oracle, expand, poincare_closed_form, series_equal
from .valuation import (
    HOLOMORPHIC,
    LAURENT,
    default_cap,
    valuation_vector,
)
from .verify import SUITES, oracle_confirms, run_suite

EXIT_INPUT = 2
EXIT_NO_FACETS = 3
EXIT_CHECK_FAILED = 1


def _read_input(source: str) -> str:
    if source.startswith("@"):
        return Path(source[1:]).read_text()
    return source


def _load(source: str, allow_diagram: bool):
    """Return ``(f or None, diagram)`` from an expression or diagram JSON."""
    text = _read_input(source).strip()
    if text.startswith("{"):
        if not allow_diagram:
            raise DiagramError("this command needs a polynomial, not a diagram")
        diagram = NewtonDiagram.from_json(json.loads(text))
        if diagram.r == 0:
            raise NoFacetsError()
        return None, diagram
    f = parse_poly(text)
    return f, germ_diagram(f)


def _emit(args, payload: dict, lines: list[str]):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _matrix_lines(name: str, rows) -> list[str]:
    return [f"{name} = ["] + [f"  {list(row)}" for row in rows] + ["]"]


def cmd_diagram(args) -> int:
    f, d = _load(args.input, allow_diagram=True)
    em = exponent_matrix(d)
    payload = d.to_json()
    payload.update(matrix=[list(r) for r in em.entries], lengths=list(em.lengths), ux=list(em.ux), uy=list(em.uy))
    lines = []
    if f is not None:
        lines.append(f"f = {format_poly(f)}")
    lines.append("vertices: " + " ".join(f"({a},{b})" for a, b in d.vertices))
    for n, e in enumerate(d.edges, 1):
        lines.append(
            f"edge {n}: {e.v_from} -> {e.v_to}  l{n} = {e.normal}  c{n} = {e.level}  s{n} = {e.length}"
        )
    lines += _matrix_lines("M", em.entries)
    lines.append(f"u(x) = {em.ux}")
    lines.append(f"u(y) = {em.uy}")
    lines.append(f"M/s symmetric (diagnostic): {reduced_matrix_is_symmetric(em)}")
    _emit(args, payload, lines)
    return 0


def cmd_poincare(args) -> int:
    _, d = _load(args.input, allow_diagram=True)
    raw = poincare_closed_form(d)
    simple = raw.simplified()
    series = expand(raw, args.max_degree)
    payload = {"binomial": raw.to_json(), "simplified": simple.to_json(), "series": series.to_json()}
    lines = [f"P = {raw}", f"  = {simple}", f"expansion: {series}"]
    status = 0
    if args.check:
        ok = series_equal(series, enumeration_oracle(d, args.max_degree))
        payload["check"] = "MATCH" if ok else "MISMATCH"
        lines.append(f"oracle check to degree {args.max_degree}: {payload['check']}")
        status = 0 if ok else EXIT_CHECK_FAILED
    _emit(args, payload, lines)
    return status


def cmd_valuate(args) -> int:
    if args.g is None:
        raise DiagramError("valuate needs -g <expr>")
    f, d = _load(args.input, allow_diagram=False)
    g = parse_poly(_read_input(args.g).strip())
    values = valuation_vector(args.which, g, f, args.cap)
    caps = [args.cap or default_cap(e) for e in d.edges]
    payload = {"which": args.which, "values": [v.to_json() for v in values], "caps": caps}
    shown = ", ".join(
        f"{v} (cap {c})" if v.kind == "at_least" else str(v) for v, c in zip(values, caps)
    )
    lines = [f"{args.which}(g) = ({shown})"]
    status = 0
    if args.oracle and args.which != "u":
        mode = HOLOMORPHIC if args.which == "vprime" else LAURENT
        checks = [oracle_confirms(g, f, i, v, mode, c) for i, (v, c) in enumerate(zip(values, caps))]
        payload["oracle"] = checks
        lines.append("oracle: " + " ".join("ok" if ok else "MISMATCH" for ok in checks))
        status = 0 if all(checks) else EXIT_CHECK_FAILED
    _emit(args, payload, lines)
    return status


def cmd_alexander(args) -> int:
    _, d = _load(args.input, allow_diagram=True)
    delta = alexander_delta(d)
    multi = alexander_multilink(d)
    red = reduced_poincare(d)
    trans = transpose_involution(red)
    matches = trans.rows == multi.numerator
    lengths_one = all(e.length == 1 for e in d.edges)
    payload = {
        "delta": delta.to_json(),
        "multilink": multi.to_json(),
        "quasihomogeneous": quasihomogeneous_poincare(d).to_json(),
        "reduced_poincare": red.to_json(),
        "reduced_alexander": trans.to_json(),
        "transpose_matches": matches,
    }
    lines = [
        f"Delta_g     = {delta}",
        f"Delta_g^s   = {multi}",
        f"P_u         = {quasihomogeneous_poincare(d)}",
    ]
    lines += _matrix_lines("reduced Poincare matrix", red.rows)
    lines += _matrix_lines("transposed (reduced multilink Alexander)", trans.rows)
    lines.append(f"transpose correspondence: {'MATCH' if matches else 'MISMATCH'}")
    if lengths_one:
        same = delta.multiset_equal(poincare_closed_form(d))
        payload["delta_equals_poincare"] = same
        lines.append(f"all s_i = 1, Delta_g equals P: {same}")
    _emit(args, payload, lines)
    return 0 if matches else EXIT_CHECK_FAILED


def cmd_verify(args) -> int:
    names = SUITES if args.suite in (None, "all") else (args.suite,)
    results = [run_suite(n, seed=args.seed, n=args.n, degree=args.degree, diagrams=args.diagrams) for n in names]
    payload = {
        "seed": args.seed,
        "suites": [
            {"name": r.name, "cases": r.cases, "passed": r.passed, "failures": r.failures} for r in results
        ],
    }
    lines = []
    for r in results:
        lines.append(str(r))
        lines += [f"  {msg}" for msg in r.failures[:10]]
    _emit(args, payload, lines)
    return 0 if all(r.passed for r in results) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvepoincare",
        description="Newton diagrams, order functions and Poincare series of plane curve germs.",
        epilog="Order-function results are certified only up to the reduction cap.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-f", "--input", help="polynomial expression, @file, or diagram JSON")
    common.add_argument("--max-degree", type=int, default=16, help="series truncation degree (default 16)")
    common.add_argument("--cap", type=int, default=None, help="reduction cap (default max(64, 8*c_i))")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("diagram", parents=[common], help="Newton diagram and facet data")
    p = sub.add_parser("poincare", parents=[common], help="closed-form Poincare series")
    p.add_argument("--check", action="store_true", help="compare with the enumeration oracle")
    p = sub.add_parser("valuate", parents=[common], help="u, v' or v'' of a germ g")
    p.add_argument("-g", help="germ to evaluate")
    p.add_argument("--which", choices=("u", "vprime", "vdoubleprime"), default="vdoubleprime")
    p.add_argument("--oracle", action="store_true", help="cross-check with linear feasibility")
    sub.add_parser("alexander", parents=[common], help="Alexander polynomials and transpose involution")
    p = sub.add_parser("verify", parents=[common], help="run the seeded property suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--n", type=int, default=None, help="number of random cases")
    p.add_argument("--degree", type=int, default=20)
    p.add_argument("--diagrams", type=int, default=25)
    return parser


COMMANDS = {
    "diagram": cmd_diagram,
    "poincare": cmd_poincare,
    "valuate": cmd_valuate,
    "alexander": cmd_alexander,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_degree < 0:
        print("error: --max-degree must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    if args.cap is not None and args.cap < 1:
        print("error: --cap must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    if args.command != "verify" and not args.input:
        print("error: -f/--input is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except NoFacetsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_FACETS
    except (PolySyntaxError, DiagramError, json.JSONDecodeError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
