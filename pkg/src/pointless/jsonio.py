"""JSON encodings of the package's value types.

Rationals are canonical ``"p/q"`` (or ``"p"``) strings everywhere. The
encoders return plain ``dict``/``list`` trees for :func:`json.dumps`; the
decoders accept the same shapes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from .distance import DistanceInterval
from .forcing import ForcedInterval, HomCheck
from .numerics import Interval, format_rational, parse_rational
from .obstruction import MonodromyCertificate, SelectorViolation, UnsatRecord
from .region import Point, Rect, Region
from .riesz import Add, Gen, Join, Meet, ProvenWithin, RefutedAt, Scale, Square, Term, Unknown
from .vietoris import BasicOpen, FinitePointSet


class SchemaError(ValueError):
    """A JSON payload does not match the expected shape."""


def rational_from_json(v: Any) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise SchemaError(f"rational must be a 'p/q' string, got {v!r}")
    return parse_rational(str(v))


rational_to_json = format_rational


def point_to_json(p: Point) -> list:
    return [format_rational(p.x), format_rational(p.y)]


def point_from_json(v: Any) -> Point:
    if not isinstance(v, list) or len(v) != 2:
        raise SchemaError(f"point must be [x, y], got {v!r}")
    return Point(rational_from_json(v[0]), rational_from_json(v[1]))


def rect_to_json(r: Rect) -> dict:
    return {
        "x": [format_rational(r.x_lo), format_rational(r.x_hi)],
        "y": [format_rational(r.y_lo), format_rational(r.y_hi)],
    }


def rect_from_json(v: Any) -> Rect:
    try:
        (x_lo, x_hi), (y_lo, y_hi) = v["x"], v["y"]
    except (KeyError, TypeError, ValueError):
        raise SchemaError(f"rect must be {{'x': [lo, hi], 'y': [lo, hi]}}, got {v!r}") from None
    return Rect(*(rational_from_json(c) for c in (x_lo, x_hi, y_lo, y_hi)))


def region_to_json(r: Optional[Region]) -> list:
    return [] if r is None else [rect_to_json(x) for x in r.rects]


def region_from_json(v: Any) -> Region:
    if not isinstance(v, list) or not v:
        raise SchemaError("region must be a non-empty list of rects")
    return Region(rect_from_json(x) for x in v)


def open_to_json(u: BasicOpen) -> dict:
    return {
        "positive": [region_to_json(o) for o in u.positive],
        "negative": region_to_json(u.negative),
    }


def open_from_json(v: Any) -> BasicOpen:
    if not isinstance(v, dict) or "positive" not in v:
        raise SchemaError("basic open must have 'positive' (and optionally 'negative')")
    positive = [region_from_json(o) for o in v["positive"]]
    if "negative" in v:
        return BasicOpen(positive, region_from_json(v["negative"]))
    return BasicOpen.normal(positive)


def point_set_to_json(a: FinitePointSet) -> list:
    return [point_to_json(p) for p in a]


def point_set_from_json(v: Any) -> FinitePointSet:
    if not isinstance(v, list):
        raise SchemaError("point set must be a list of points")
    return FinitePointSet(point_from_json(p) for p in v)


_BINARY = {"add": Add, "join": Join, "meet": Meet}


def term_to_json(t: Term) -> dict:
    if isinstance(t, Gen):
        return {"gen": t.name}
    if isinstance(t, Scale):
        return {"op": "scale", "q": format_rational(t.q), "arg": term_to_json(t.arg)}
    if isinstance(t, Square):
        return {"op": "square", "arg": term_to_json(t.arg)}
    for name, cls in _BINARY.items():
        if isinstance(t, cls):
            return {"op": name, "args": [term_to_json(t.left), term_to_json(t.right)]}
    raise TypeError(f"not a Riesz term: {t!r}")


def term_from_json(v: Any) -> Term:
    if not isinstance(v, dict):
        raise SchemaError(f"term must be an object, got {v!r}")
    if "gen" in v:
        if v["gen"] not in ("one", "x", "y"):
            raise SchemaError(f"unknown generator {v['gen']!r}")
        return Gen(v["gen"])
    op = v.get("op")
    if op in _BINARY:
        args = v.get("args")
        if not isinstance(args, list) or len(args) != 2:
            raise SchemaError(f"{op} needs two args")
        return _BINARY[op](term_from_json(args[0]), term_from_json(args[1]))
    if op == "scale":
        return Scale(rational_from_json(v.get("q")), term_from_json(v.get("arg")))
    if op == "square":
        return Square(term_from_json(v.get("arg")))
    raise SchemaError(f"unknown term node {v!r}")


def interval_to_json(iv: Interval) -> dict:
    return {"lo": format_rational(iv.lo), "hi": format_rational(iv.hi)}


def interval_from_json(v: Any) -> Interval:
    return Interval(rational_from_json(v["lo"]), rational_from_json(v["hi"]))


def verdict_to_json(v) -> dict:
    if isinstance(v, ProvenWithin):
        return {"verdict": "proven_within", "tol": format_rational(v.tol)}
    if isinstance(v, RefutedAt):
        return {
            "verdict": "refuted_at",
            "point": point_to_json(v.point),
            "r": format_rational(v.r_value),
            "s": format_rational(v.s_value),
        }
    if isinstance(v, Unknown):
        return {"verdict": "unknown", "reason": v.reason}
    raise TypeError(f"not a verdict: {v!r}")


def forced_interval_to_json(f: ForcedInterval) -> dict:
    return {
        "lo": format_rational(f.lo),
        "hi": format_rational(f.hi),
        "open": open_to_json(f.open),
        "term": term_to_json(f.term),
    }


def distance_interval_to_json(d: DistanceInterval) -> dict:
    return {"lo": format_rational(d.lo), "hi": format_rational(d.hi), "metric": d.metric.value}


def hom_check_to_json(h: HomCheck) -> dict:
    out = {
        "point": point_to_json(h.point),
        "join_value": format_rational(h.join_value),
        "bump_values": [format_rational(b) for b in h.bump_values],
    }
    if h.index is None:
        out["outside"] = True
    else:
        out["index"] = h.index
    return out


def _pair_to_json(p) -> list:
    return [interval_to_json(p[0]), interval_to_json(p[1])]


def monodromy_to_json(c: MonodromyCertificate) -> dict:
    return {
        "radius_sq": format_rational(c.radius_sq),
        "steps": c.steps,
        "start_root": _pair_to_json(c.start_root),
        "end_root": _pair_to_json(c.end_root),
        "separation": interval_to_json(c.separation),
        "consistency_bound": format_rational(c.consistency_bound),
        "valid": c.valid,
        "trace": [
            {
                "k": s.k,
                "t": None if s.t is None else format_rational(s.t),
                "w": point_to_json(s.w),
                "root": _pair_to_json(s.root),
                "flipped": s.flipped,
            }
            for s in c.trace
        ],
    }


def violation_to_json(v: SelectorViolation) -> dict:
    detail = {
        k: (format_rational(x) if isinstance(x, Fraction) else x) for k, x in v.detail.items()
    }
    return {
        "kind": v.kind,
        "step": v.step,
        "detail": detail,
        "threshold_sq": format_rational(v.threshold_sq),
        "trace": [
            {
                "k": s.k,
                "pair": [point_to_json(s.pair[0]), point_to_json(s.pair[1])],
                "choice": s.choice,
                "chosen": point_to_json(s.chosen),
            }
            for s in v.trace
        ],
    }


def unsat_to_json(r: UnsatRecord) -> dict:
    return {"n": r.n, "checked": r.checked, "satisfying": r.satisfying}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def load_file(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
