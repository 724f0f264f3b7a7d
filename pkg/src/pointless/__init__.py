"""Exact, point-free computations for the generic finite subset of the plane.

The generic object has no points; it is observed only through what basic
opens of the Vietoris hyperspace force: equalities of Riesz terms, intervals
for suprema and distances, and distance-oracle queries. The obstruction
harnesses produce certificates that no point selector can exist.
"""

from .numerics import Interval, Q, format_rational, parse_rational, rational_sqrt_enclosure
from .region import Metric, Point, Rect, Region
from .riesz import ONE, X, Y, bump_term, enclosure, equal_on_region, eval_term, sup_enclosure
from .vietoris import BasicOpen, FinitePointSet, separated_neighborhood, vietoris_member

__all__ = [
    "BasicOpen",
    "FinitePointSet",
    "Interval",
    "Metric",
    "ONE",
    "Point",
    "Q",
    "Rect",
    "Region",
    "X",
    "Y",
    "bump_term",
    "enclosure",
    "equal_on_region",
    "eval_term",
    "format_rational",
    "parse_rational",
    "rational_sqrt_enclosure",
    "separated_neighborhood",
    "sup_enclosure",
    "vietoris_member",
]
