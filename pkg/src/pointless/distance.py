"""Distances to the generic set, seen only through forced intervals.

The generic set has no points to measure to. What a normal-form open does pin
down is an interval for the distance from any point ``z``: at least the
distance to the union of the positives, and at most the smallest supremum of
``d(z, .)`` over a single positive, since every member meets every positive.

:class:`DistanceOracle` packages those intervals as a callback, and
:func:`recover_positive_info` rebuilds approximate positive information from
nothing but oracle queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Optional, Tuple

from .errors import PreconditionError
from .numerics import Q, rational_sqrt_enclosure
from .region import Metric, Point, Rect, Region, region_distance
from .riesz import DEFAULT_TOL, Term, X, Y, sup_enclosure
from .vietoris import BasicOpen


@dataclass(frozen=True)
class DistanceInterval:
    lo: Fraction
    hi: Fraction
    metric: Metric

    def __post_init__(self):
        if not (0 <= self.lo <= self.hi):
            raise ValueError(f"bad distance interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def distance_term(z: Point, m: Metric) -> Term:
    """The Riesz term for ``d(z, .)``: taxicab, or squared Euclidean."""
    dx, dy = X - z.x, Y - z.y
    if m is Metric.L1:
        return abs(dx) + abs(dy)
    if m is Metric.L2SQ:
        return dx.squared() + dy.squared()
    raise PreconditionError(f"no distance term for metric {m.value}")


def forced_distance_interval(u: BasicOpen, z: Point, m: Metric, tol=DEFAULT_TOL) -> DistanceInterval:
    if not u.is_normal:
        raise PreconditionError("basic open is not in normal form")
    tol = Q(tol)
    base = Metric.L2SQ if m is Metric.L2 else m
    if base not in (Metric.L1, Metric.L2SQ):
        raise PreconditionError(f"unsupported metric {m.value}")
    lo = region_distance(u.positive_union, z, base)
    d = distance_term(z, base)
    hi = min(sup_enclosure(d, o, tol).hi for o in u.positive)
    if m is Metric.L2:
        lo = rational_sqrt_enclosure(lo, tol).lo
        hi = rational_sqrt_enclosure(hi, tol).hi
    return DistanceInterval(lo, hi, m)


class DistanceOracle:
    """Point -> :class:`DistanceInterval` callback together with its metric."""

    def __init__(self, query: Callable[[Point], DistanceInterval], metric: Metric):
        self._query = query
        self.metric = metric

    def query(self, p: Point) -> DistanceInterval:
        iv = self._query(p)
        if iv.lo > iv.hi:
            raise ValueError("oracle returned an interval with lo > hi")
        return iv

    __call__ = query

    @classmethod
    def from_open(cls, u: BasicOpen, metric: Metric = Metric.L1, tol=DEFAULT_TOL) -> "DistanceOracle":
        """The canonical oracle of a normal-form open."""
        if not u.is_normal:
            raise PreconditionError("basic open is not in normal form")
        return cls(lambda p: forced_distance_interval(u, p, metric, tol), metric)


def grid_points(window: Rect, pitch) -> Iterator[Point]:
    """Points ``corner + k * pitch`` of the closed window, row by row from the bottom."""
    pitch = Q(pitch)
    if pitch <= 0:
        raise PreconditionError("pitch must be positive")
    nx = int((window.x_hi - window.x_lo) // pitch)
    ny = int((window.y_hi - window.y_lo) // pitch)
    for j in range(ny + 1):
        for i in range(nx + 1):
            yield Point(window.x_lo + i * pitch, window.y_lo + j * pitch)


def distance_field(oracle: DistanceOracle, window: Rect, pitch) -> List[Tuple[Point, DistanceInterval]]:
    return [(p, oracle.query(p)) for p in grid_points(window, pitch)]


def recover_positive_info(oracle: DistanceOracle, window: Rect, pitch, eps) -> Optional[Region]:
    """Union of the grid cells whose centre sees a forced distance below ``2 * eps``.

    Returns None when no cell qualifies.
    """
    pitch, eps = Q(pitch), Q(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    half = pitch / 2
    cells = [
        Rect.around(p, half)
        for p, iv in distance_field(oracle, window, pitch)
        if iv.hi < 2 * eps
    ]
    return Region(cells) if cells else None
