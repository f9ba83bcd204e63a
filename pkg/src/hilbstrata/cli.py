"""Command-line front end: ``hilbstrata staircase|equations|verify|gluing|deform``.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .charts import ChartError, gluing_map, intersection_det
from .deform import DeformationError, apply_deformation, build_deformation
from .equations import WHICH, EquationError, gen_stratum, generate
from .order import OrderError, parse_order, parse_vars
from .poly import PolyError
from .staircase import StaircaseError, StandardSet
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def parse_delta(text: str) -> StandardSet:
    """Inline JSON or a path to a JSON file.

    Accepted shapes: ``[[0,0],[1,0]]`` or ``{"n": 2, "elements": [...]}``.
    """
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"--delta is neither a file nor valid JSON: {exc}") from None
    try:
        if isinstance(data, dict):
            return StandardSet.from_json(data)
        if isinstance(data, list):
            return StandardSet.of(data)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed standard set: {exc}") from None
    raise InputError("--delta must be a list of exponents or an object with 'n' and 'elements'")


def _order(args, n: int):
    perm = parse_vars(args.vars, n) if args.vars else None
    return parse_order(args.order, n, perm)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def staircase_report(delta: StandardSet) -> dict:
    lists = lambda xs: [list(x) for x in xs]
    return {
        "delta": delta.to_json(),
        "corners": lists(delta.corners),
        "border": lists(delta.border),
        "iterated_borders": {str(i): lists(delta.iterated_border(i)) for i in (1, 2)},
        "edge_points": lists(delta.edge_points),
        "counts": {"r": len(delta), "corners": len(delta.corners), "border": len(delta.border),
                   "edge_points": len(delta.edge_points)},
    }


def cmd_staircase(args) -> int:
    _emit(_dump(staircase_report(parse_delta(args.delta))), args.out)
    return EXIT_OK


def cmd_equations(args) -> int:
    delta = parse_delta(args.delta)
    order = _order(args, delta.n) if args.order else None
    weights = [int(w) for w in args.weights.split(",")] if args.weights else None
    E = generate(delta, args.which, order, weights)
    _emit(E.to_cas() if args.export == "cas" else E.dumps(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    res = run_suite(args.suite, max_n=args.max_n, max_r=args.max_r, seed=args.seed)
    _emit(res.dumps(), args.out)
    if not res.ok:
        print(f"{args.suite}: {len(res.failures)} failing case(s) of {res.cases}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_gluing(args) -> int:
    delta, eps = parse_delta(args.delta), parse_delta(args.eps)
    gm = gluing_map(delta, eps)
    report = gm.to_json()
    report["intersection_det"] = str(intersection_det(delta, eps))
    _emit(_dump(report), args.out)
    return EXIT_OK


def cmd_deform(args) -> int:
    delta = parse_delta(args.delta)
    order = _order(args, delta.n)
    D = build_deformation(delta, order)
    out = apply_deformation(gen_stratum(delta, order), D)
    _emit(_dump(out.report()), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hilbstrata", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, order_default="lex"):
        sp.add_argument("--delta", required=True, help="standard set as inline JSON or a JSON file")
        sp.add_argument("--order", default=order_default,
                        help="lex, grlex, grevlex or w:<c1,..,cn>:<tiebreak> (default %(default)s)")
        sp.add_argument("--vars", help="variable priority, e.g. 2,1 for x2 > x1")
        sp.add_argument("--out", help="write to this file instead of stdout")

    sp = sub.add_parser("staircase", help="corners, borders and edge points of a standard set")
    sp.add_argument("--delta", required=True, help="standard set as inline JSON or a JSON file")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_staircase)

    sp = sub.add_parser("equations", help="generate and export an equation set")
    common(sp, order_default=None)
    sp.add_argument("--which", choices=WHICH, default="fewer")
    sp.add_argument("--export", choices=("json", "cas"), default="json")
    sp.add_argument("--weights", help="grading for --which homog, e.g. 1,1")
    sp.set_defaults(func=cmd_equations)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--max-n", type=int, default=3, help="largest ambient dimension (default 3)")
    sp.add_argument("--max-r", type=int,
                    help="largest size; default 6 for n<=2 and 5 for n=3 (fewer), 4 (gluing), 5 (deform, strata)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gluing", help="transition map from the delta-chart to the eps-chart")
    sp.add_argument("--delta", required=True)
    sp.add_argument("--eps", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gluing)

    sp = sub.add_parser("deform", help="weight vector and per-generator t-weights of the degeneration")
    common(sp)
    sp.set_defaults(func=cmd_deform)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, StaircaseError, OrderError, EquationError, PolyError, ChartError,
            DeformationError, OSError) as exc:
        print(f"hilbstrata: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
