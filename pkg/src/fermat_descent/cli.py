"""Command line interface.

Exit codes: 0 success (including "no solutions"), 2 invalid input,
3 search time budget exhausted, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import report as rep
from .curve import CurvePoint, build_curve, forward_map, to_integral
from .descent import solve, verify_consistency
from .equation import Triplet, sign_orbit, validate
from .errors import FermatDescentError, ValidationError
from .point_search import SearchBounds

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3
EXIT_IO = 4


def _triplet(text: str) -> Triplet:
    parts = [int(s) for s in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected x,y,z")
    return Triplet(*parts)


def _point(text: str) -> CurvePoint:
    parts = [Fraction(s) for s in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected X,Y")
    return CurvePoint(*parts)


def _bounds(args) -> SearchBounds:
    base = SearchBounds.from_env()
    return SearchBounds(
        args.d_max if args.d_max is not None else base.d_max,
        args.a_max if args.a_max is not None else base.a_max,
        args.time_budget,
    )


def _write(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def format_report(r) -> str:
    c = r.curve
    lines = [
        f"equation: {r.equation}",
        f"curve: Y^2 = X^{c.p} + {c.rational_constant}   (genus {c.genus})",
        f"integral model: N^2 = M^{c.p} + {c.integral_constant}",
        f"points found ({len(r.search.points)}):",
    ]
    for pt in r.search.points:
        integral = to_integral(pt, c)
        lines.append(f"  {pt}    integral {integral}")
    for rc in r.recoveries:
        if rc.skipped:
            lines.append(f"point {rc.point}: skipped ({rc.skipped})")
            continue
        lines.append(f"point {rc.point}: A' = {rc.branches[0].a_prime}")
        for br in rc.branches:
            sign = "+" if br.sign > 0 else "-"
            if br.outcome == "solution":
                detail = f"solution {br.triplet}"
            elif br.outcome == "no_rational_root":
                detail = "no rational p-th root for " + ", ".join(br.failed_ratios)
            else:
                detail = "degenerate denominator"
            lines.append(
                f"  branch {sign}: x^p/z^p = {br.x_over_z_pth}, "
                f"y^p/z^p = {br.y_over_z_pth} -> {detail}"
            )
    if r.trivial_solution is not None:
        lines.append(f"coefficient sum is zero: {r.trivial_solution} is a solution")
    if r.solutions:
        lines.append("solutions (up to sign): " + ", ".join(map(str, r.solutions)))
    else:
        lines.append("no rational triplets found")
    for key, value in sorted(r.annotations.items()):
        lines.append(f"annotation (unverified) {key}: {value}")
    lines.extend(f"diagnostic: {d}" for d in r.diagnostics)
    lines.append(f"complete within bounds: {'yes' if r.complete_within_bounds else 'no'}")
    lines.append(f"note: {r.caveat}")
    return "\n".join(lines) + "\n"


def cmd_solve(args) -> int:
    eq = validate(args.A, args.B, args.C, args.p, strict=not args.lenient)
    bounds = _bounds(args)
    r = solve(eq, bounds)
    if args.jacobian_rank is not None:
        r.annotations["jacobian_rank"] = str(args.jacobian_rank)
    if args.format == "json":
        status = "ok" if r.complete_within_bounds else "budget_exceeded"
        text = rep.dumps(rep.make_record(
            status, f"{eq.A},{eq.B},{eq.C},{eq.p}", r, bounds=bounds, canonical=args.canonical
        )) + "\n"
    else:
        text = format_report(r)
    _write(text, args.output)
    return EXIT_OK if r.complete_within_bounds else EXIT_BUDGET


def cmd_curve(args) -> int:
    eq = validate(args.A, args.B, args.C, args.p, strict=not args.lenient)
    m = build_curve(eq)
    if args.format == "json":
        text = rep.dumps({
            "rational_constant": str(m.rational_constant),
            "integral_constant": str(m.integral_constant),
            "genus": str(m.genus),
            "p": str(m.p),
        }) + "\n"
    else:
        text = (
            f"c = {m.rational_constant}\n"
            f"k = {m.integral_constant}\n"
            f"g = {m.genus}\n"
        )
    _write(text, args.output)
    return EXIT_OK


def cmd_map_point(args) -> int:
    eq = validate(args.A, args.B, args.C, args.p, strict=not args.lenient)
    pt = forward_map(eq, args.triplet)
    if args.format == "json":
        text = rep.dumps(rep.point_to_json(pt)) + "\n"
    else:
        text = f"({pt.X}, {pt.Y})\n"
    _write(text, args.output)
    return EXIT_OK


def cmd_orbit(args) -> int:
    eq = validate(args.A, args.B, args.C, args.p, strict=not args.lenient)
    pairs = sign_orbit(eq, args.triplet)
    if args.format == "json":
        text = "".join(
            rep.dumps({
                "signs": list(v.signs),
                "equation": rep.equation_to_json(v.equation),
                "triplet": rep.triplet_to_json(t),
            }) + "\n"
            for v, t in pairs
        )
    else:
        text = "".join(f"{v.equation}  <-  {t}\n" for v, t in pairs)
    _write(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    eq = validate(args.A, args.B, args.C, args.p, strict=not args.lenient)
    ok = verify_consistency(args.triplet, args.point, eq)
    text = rep.dumps({"consistent": ok}) + "\n" if args.format == "json" else f"{ok}\n"
    _write(text, args.output)
    return EXIT_OK


def parse_batch_line(line: str, default: SearchBounds):
    fields = [int(s) for s in line.split(",")]
    if len(fields) not in (4, 6):
        raise ValueError("expected A,B,C,p[,d_max,a_max]")
    A, B, C, p = fields[:4]
    bounds = SearchBounds(*fields[4:], default.time_budget) if len(fields) == 6 else default
    return (A, B, C, p), bounds


def run_batch_line(line: str, default: SearchBounds, canonical: bool, strict: bool = True) -> dict:
    """Solve one batch line; every failure becomes a record, never an exception."""
    try:
        (A, B, C, p), bounds = parse_batch_line(line, default)
    except ValueError as exc:
        return rep.make_record("parse_error", line, error=str(exc), canonical=canonical)
    try:
        eq = validate(A, B, C, p, strict=strict)
    except ValidationError as exc:
        return rep.make_record("validation_error", line, error=str(exc), bounds=bounds, canonical=canonical)
    try:
        r = solve(eq, bounds)
    except FermatDescentError as exc:
        return rep.make_record("error", line, error=str(exc), bounds=bounds, canonical=canonical)
    status = "ok" if r.complete_within_bounds else "budget_exceeded"
    return rep.make_record(status, line, r, bounds=bounds, canonical=canonical)


def cmd_batch(args) -> int:
    default = _bounds(args)
    with open(args.input) as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    strict = not args.lenient
    n = len(lines)
    if args.jobs > 1 and n > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            records = list(ex.map(run_batch_line, lines, [default] * n, [args.canonical] * n, [strict] * n))
    else:
        records = [run_batch_line(ln, default, args.canonical, strict) for ln in lines]
    text = "".join(rep.dumps(rec) + "\n" for rec in records)
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "a") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermat-descent",
        description="Rational solutions of A x^p + B y^p + C z^p = 0 via the attached hyperelliptic curve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("-o", "--output", default=None, help="write output here instead of stdout")
    common.add_argument("--lenient", action="store_true",
                        help="skip the coprime / p-th-power-free checks")

    eqargs = argparse.ArgumentParser(add_help=False)
    eqargs.add_argument("-A", type=int, required=True)
    eqargs.add_argument("-B", type=int, required=True)
    eqargs.add_argument("-C", type=int, required=True)
    eqargs.add_argument("-p", type=int, required=True)

    bnd = argparse.ArgumentParser(add_help=False)
    bnd.add_argument("--d-max", type=int, default=None, help="largest denominator d (default 8)")
    bnd.add_argument("--a-max", type=int, default=None, help="largest |numerator| a (default 10^6)")
    bnd.add_argument("--time-budget", type=float, default=None, help="seconds")
    bnd.add_argument("--canonical", action="store_true",
                     help="omit the timestamp so JSON output is byte-reproducible")

    p = sub.add_parser("solve", parents=[common, eqargs, bnd], help="full pipeline for one equation")
    p.add_argument("--jacobian-rank", type=int, default=None,
                   help="record a user-supplied Jacobian rank (stored as unverified)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("curve", parents=[common, eqargs], help="print the curve constants")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("map-point", parents=[common, eqargs], help="map a solution to its curve point")
    p.add_argument("-t", "--triplet", type=_triplet, required=True)
    p.set_defaults(func=cmd_map_point)

    p = sub.add_parser("orbit", parents=[common, eqargs], help="the 8 sign variants of a solution")
    p.add_argument("-t", "--triplet", type=_triplet, required=True)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify", parents=[common, eqargs], help="check a (triplet, point) pair")
    p.add_argument("-t", "--triplet", type=_triplet, required=True)
    p.add_argument("--point", type=_point, required=True, help="X,Y with rationals like 3/4")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", parents=[common, bnd], help="solve every line A,B,C,p[,d_max,a_max] of a file")
    p.add_argument("input")
    p.add_argument("-j", "--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (FermatDescentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
