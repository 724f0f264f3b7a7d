"""Command-line front end.

Exit codes: 0 on success, 1 when the engine rejects the request, 2 when the
command line or an input file cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, List, Optional, TextIO

from . import jsonio
from .distance import DistanceOracle, distance_field, forced_distance_interval, recover_positive_info
from .errors import PointlessError
from .forcing import forced_sup_interval, forces_equal
from .numerics import format_rational, parse_rational
from .obstruction import (
    SweepConfig,
    antipodal_sweep,
    antipodal_unsat,
    constant_selector,
    flip_selector,
    larger_real_part_selector,
    random_selector,
    sqrt_monodromy,
)
from .region import Metric, Point, Rect, Region
from .riesz import DEFAULT_MAX_DEPTH, DEFAULT_TOL, enclosure, eval_term, sup_enclosure
from .svg import heatmap_svg, path_svg, region_svg
from .vietoris import FinitePointSet


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _point(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"point must be 'x,y', got {text!r}")
    return Point(_rational(parts[0]), _rational(parts[1]))


def _window(text: str) -> Rect:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"window must be 'x_lo,x_hi,y_lo,y_hi', got {text!r}")
    try:
        return Rect(*(_rational(p) for p in parts))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _metric(text: str) -> Metric:
    try:
        return Metric(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"metric must be l1, l2 or l2sq, got {text!r}")


def _load(path: str, decode: Callable):
    try:
        return decode(jsonio.load_file(path))
    except (OSError, json.JSONDecodeError, ValueError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointless",
        description="Forced bounds and no-point certificates for the generic finite point set.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_rational, default=DEFAULT_TOL)
    common.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv", "svg"))

    p = sub.add_parser("eval", parents=[common], help="exact value of a term at a point")
    p.add_argument("--term", required=True)
    p.add_argument("--point", type=_point, required=True)

    p = sub.add_parser("encl", parents=[common], help="enclosure of a term over a box")
    p.add_argument("--term", required=True)
    p.add_argument("--window", type=_window, required=True)

    p = sub.add_parser("sup", parents=[common], help="supremum enclosure over a box or a negative region")
    p.add_argument("--term", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--window", type=_window)
    g.add_argument("--open")

    p = sub.add_parser("force-eq", parents=[common], help="does a basic open force r = s")
    p.add_argument("--open", required=True)
    p.add_argument("--term", action="append", required=True, help="give twice: r then s")

    p = sub.add_parser("forced-sup", parents=[common], help="forced supremum interval")
    p.add_argument("--open", required=True)
    p.add_argument("--term", required=True)

    p = sub.add_parser("dist", parents=[common], help="forced distance interval(s)")
    p.add_argument("--open", required=True)
    p.add_argument("--metric", type=_metric, default=Metric.L1)
    p.add_argument("--point", type=_point)
    p.add_argument("--window", type=_window)
    p.add_argument("--pitch", type=_rational)

    p = sub.add_parser("recover", parents=[common], help="recover positive information from distances")
    p.add_argument("--open", required=True)
    p.add_argument("--metric", type=_metric, default=Metric.L1)
    p.add_argument("--window", type=_window, required=True)
    p.add_argument("--pitch", type=_rational, required=True)
    p.add_argument("--eps", type=_rational, required=True)

    p = sub.add_parser("obstruct-sqrt", parents=[common], help="square-root monodromy certificate")
    p.add_argument("--radius-sq", type=_rational, default=Fraction(1, 4))
    p.add_argument("--steps", type=int, default=64)

    p = sub.add_parser("obstruct-antipodal", parents=[common], help="antipodal sweep of a selector")
    p.add_argument("--points", help="JSON point set (default: (0,0) and (1,0))")
    p.add_argument("--target", type=int, default=0)
    p.add_argument("--iota", type=_rational, default=Fraction(1, 10))
    p.add_argument("--steps", type=int, default=16)
    p.add_argument("--selector", choices=("constant", "flip", "real", "random"), default="constant")

    p = sub.add_parser("unsat", parents=[common], help="brute-force the antipodal parity constraints")
    p.add_argument("--n", type=int, required=True)

    return parser


def _emit_json(out: TextIO, obj) -> None:
    out.write(jsonio.dumps(obj) + "\n")


def _cmd_eval(args, out):
    t = _load(args.term, jsonio.term_from_json)
    out.write(format_rational(eval_term(t, args.point)) + "\n")


def _cmd_encl(args, out):
    t = _load(args.term, jsonio.term_from_json)
    iv = enclosure(t, args.window, args.tol, args.max_depth)
    _emit_json(out, jsonio.interval_to_json(iv))


def _cmd_sup(args, out):
    t = _load(args.term, jsonio.term_from_json)
    if args.window is not None:
        region = Region.of(args.window)
    else:
        region = _load(args.open, jsonio.open_from_json).negative
    cut = sup_enclosure(t, region, args.tol, args.max_depth)
    _emit_json(out, jsonio.interval_to_json(cut.sup_enclosure))


def _cmd_force_eq(args, out):
    if len(args.term) != 2:
        raise UsageError("force-eq needs exactly two --term files")
    u = _load(args.open, jsonio.open_from_json)
    r, s = (_load(p, jsonio.term_from_json) for p in args.term)
    v = forces_equal(u, r, s, args.tol, max_depth=args.max_depth, seed=args.seed)
    _emit_json(out, jsonio.verdict_to_json(v))


def _cmd_forced_sup(args, out):
    u = _load(args.open, jsonio.open_from_json)
    t = _load(args.term, jsonio.term_from_json)
    f = forced_sup_interval(u, t, args.tol, max_depth=args.max_depth)
    _emit_json(out, jsonio.forced_interval_to_json(f))


def _field_csv(out, rows):
    out.write("x,y,lo,hi\n")
    for p, iv in rows:
        out.write(f"{format_rational(p.x)},{format_rational(p.y)},{format_rational(iv.lo)},{format_rational(iv.hi)}\n")


def _cmd_dist(args, out):
    u = _load(args.open, jsonio.open_from_json)
    if args.point is not None:
        d = forced_distance_interval(u, args.point, args.metric, args.tol)
        _emit_json(out, jsonio.distance_interval_to_json(d))
        return
    if args.window is None or args.pitch is None:
        raise UsageError("dist needs --point, or --window and --pitch")
    oracle = DistanceOracle.from_open(u, args.metric, args.tol)
    rows = distance_field(oracle, args.window, args.pitch)
    if args.format == "csv":
        _field_csv(out, rows)
    elif args.format == "svg":
        cells = [(Rect.around(p, args.pitch / 2), iv.hi) for p, iv in rows]
        out.write(heatmap_svg(args.window, cells))
    else:
        _emit_json(out, [
            {"point": jsonio.point_to_json(p), **jsonio.distance_interval_to_json(iv)} for p, iv in rows
        ])


def _cmd_recover(args, out):
    u = _load(args.open, jsonio.open_from_json)
    oracle = DistanceOracle.from_open(u, args.metric, args.tol)
    if args.format == "csv":
        rows = distance_field(oracle, args.window, args.pitch)
        out.write("x,y,lo,hi,included\n")
        for p, iv in rows:
            inc = int(iv.hi < 2 * args.eps)
            out.write(
                f"{format_rational(p.x)},{format_rational(p.y)},"
                f"{format_rational(iv.lo)},{format_rational(iv.hi)},{inc}\n"
            )
        return
    region = recover_positive_info(oracle, args.window, args.pitch, args.eps)
    if args.format == "svg":
        out.write(region_svg(args.window, region, u.positive))
    else:
        _emit_json(out, {"recovered": jsonio.region_to_json(region), "empty": region is None})


def _cmd_obstruct_sqrt(args, out):
    cert = sqrt_monodromy(args.radius_sq, args.steps, args.tol)
    if args.format == "svg":
        r = cert.radius_sq
        eps = float(r) ** 0.5 * 1.25
        bound = Fraction(eps).limit_denominator(1000)
        window = Rect(-bound, bound, -bound, bound)
        path = [Point(s.root[0].mid, s.root[1].mid) for s in cert.trace]
        out.write(path_svg(window, path))
    else:
        _emit_json(out, jsonio.monodromy_to_json(cert))


def _cmd_obstruct_antipodal(args, out):
    if args.points:
        base = _load(args.points, jsonio.point_set_from_json)
    else:
        base = FinitePointSet([Point(Fraction(0), Fraction(0)), Point(Fraction(1), Fraction(0))])
    cfg = SweepConfig(base, args.target, args.iota, args.steps)
    selector = {
        "constant": lambda: constant_selector(0),
        "flip": lambda: flip_selector(args.steps // 2),
        "real": lambda: larger_real_part_selector,
        "random": lambda: random_selector(args.seed),
    }[args.selector]()
    _emit_json(out, jsonio.violation_to_json(antipodal_sweep(selector, cfg)))


def _cmd_unsat(args, out):
    rec = antipodal_unsat(args.n)
    if args.format == "json":
        _emit_json(out, jsonio.unsat_to_json(rec))
    else:
        out.write(f"checked {rec.checked}, satisfying {rec.satisfying}\n")


COMMANDS = {
    "eval": _cmd_eval,
    "encl": _cmd_encl,
    "sup": _cmd_sup,
    "force-eq": _cmd_force_eq,
    "forced-sup": _cmd_forced_sup,
    "dist": _cmd_dist,
    "recover": _cmd_recover,
    "obstruct-sqrt": _cmd_obstruct_sqrt,
    "obstruct-antipodal": _cmd_obstruct_antipodal,
    "unsat": _cmd_unsat,
}


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pointless: error: {exc}", file=sys.stderr)
        return 2
    except PointlessError as exc:
        print(f"pointless: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
