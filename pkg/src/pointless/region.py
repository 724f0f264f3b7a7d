"""Open regions of the plane built from rational rectangles.

A :class:`Region` is a finite union of open axis-aligned rectangles. Every
predicate here is decided exactly over the rationals: containment uses the
coordinate grid spanned by the rectangle edges, on which each cell, open
edge and vertex is either inside a rectangle or disjoint from it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

from .errors import PreconditionError
from .numerics import Q


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Q(x), Q(y))


class Metric(enum.Enum):
    L1 = "l1"
    L2SQ = "l2sq"
    LINF = "linf"
    # Euclidean; only ever reported through sqrt enclosures of L2SQ values.
    L2 = "l2"


def metric_value(dx: Fraction, dy: Fraction, m: Metric) -> Fraction:
    """Exact size of the offset ``(dx, dy)`` under a rational-exact metric."""
    if m is Metric.L1:
        return abs(dx) + abs(dy)
    if m is Metric.L2SQ:
        return dx * dx + dy * dy
    if m is Metric.LINF:
        return max(abs(dx), abs(dy))
    raise PreconditionError("L2 has no exact rational value; use L2SQ")


def point_distance(p: Point, q: Point, m: Metric) -> Fraction:
    return metric_value(p.x - q.x, p.y - q.y, m)


@dataclass(frozen=True)
class Rect:
    """Open rectangle ``(x_lo, x_hi) x (y_lo, y_hi)``."""

    x_lo: Fraction
    x_hi: Fraction
    y_lo: Fraction
    y_hi: Fraction

    def __post_init__(self):
        for name in ("x_lo", "x_hi", "y_lo", "y_hi"):
            object.__setattr__(self, name, Q(getattr(self, name)))
        if not (self.x_lo < self.x_hi and self.y_lo < self.y_hi):
            raise PreconditionError(f"degenerate rectangle {self}")

    @classmethod
    def around(cls, p: Point, radius) -> "Rect":
        """Open L-infinity ball of ``radius`` centred at ``p``."""
        r = Q(radius)
        return cls(p.x - r, p.x + r, p.y - r, p.y + r)

    @property
    def center(self) -> Point:
        return Point((self.x_lo + self.x_hi) / 2, (self.y_lo + self.y_hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> Fraction:
        return self.y_hi - self.y_lo

    def corners(self) -> Tuple[Point, Point, Point, Point]:
        return (
            Point(self.x_lo, self.y_lo),
            Point(self.x_hi, self.y_lo),
            Point(self.x_lo, self.y_hi),
            Point(self.x_hi, self.y_hi),
        )

    def contains(self, p: Point) -> bool:
        return self.x_lo < p.x < self.x_hi and self.y_lo < p.y < self.y_hi

    def intersect(self, other: "Rect") -> Optional["Rect"]:
        x_lo, x_hi = max(self.x_lo, other.x_lo), min(self.x_hi, other.x_hi)
        y_lo, y_hi = max(self.y_lo, other.y_lo), min(self.y_hi, other.y_hi)
        if x_lo < x_hi and y_lo < y_hi:
            return Rect(x_lo, x_hi, y_lo, y_hi)
        return None

    def expand(self, eps) -> "Rect":
        e = Q(eps)
        return Rect(self.x_lo - e, self.x_hi + e, self.y_lo - e, self.y_hi + e)

    def split(self) -> Tuple["Rect", "Rect"]:
        """Bisect the longest side; ties split x first."""
        if self.width >= self.height:
            xm = (self.x_lo + self.x_hi) / 2
            return (
                Rect(self.x_lo, xm, self.y_lo, self.y_hi),
                Rect(xm, self.x_hi, self.y_lo, self.y_hi),
            )
        ym = (self.y_lo + self.y_hi) / 2
        return (
            Rect(self.x_lo, self.x_hi, self.y_lo, ym),
            Rect(self.x_lo, self.x_hi, ym, self.y_hi),
        )

    def distance_to(self, p: Point, m: Metric) -> Fraction:
        """Distance from ``p`` to the closure of the rectangle."""
        dx = max(self.x_lo - p.x, Fraction(0), p.x - self.x_hi)
        dy = max(self.y_lo - p.y, Fraction(0), p.y - self.y_hi)
        return metric_value(dx, dy, m)

    def farthest_from(self, p: Point, m: Metric) -> Fraction:
        """Supremum of the distance from ``p`` over the rectangle."""
        return max(point_distance(p, c, m) for c in self.corners())


@dataclass(frozen=True)
class Region:
    """Finite non-empty union of open rectangles; overlaps are allowed."""

    rects: Tuple[Rect, ...]

    def __init__(self, rects: Iterable[Rect]):
        rects = tuple(rects)
        if not rects:
            raise PreconditionError("a region needs at least one rectangle")
        object.__setattr__(self, "rects", rects)

    @classmethod
    def of(cls, *rects: Rect) -> "Region":
        return cls(rects)

    def __iter__(self):
        return iter(self.rects)

    def __len__(self):
        return len(self.rects)

    def __contains__(self, p: Point) -> bool:
        return region_member(self, p)

    def union(self, *others: "Region") -> "Region":
        rects = list(self.rects)
        for o in others:
            rects.extend(o.rects)
        return Region(rects)

    def bounds(self) -> Rect:
        return Rect(
            min(r.x_lo for r in self.rects),
            max(r.x_hi for r in self.rects),
            min(r.y_lo for r in self.rects),
            max(r.y_hi for r in self.rects),
        )

    def same_points(self, other: "Region") -> bool:
        return region_subset(self, other) and region_subset(other, self)


def union_of(regions: Sequence[Region]) -> Region:
    return regions[0].union(*regions[1:])


def region_member(region: Region, p: Point) -> bool:
    return any(r.contains(p) for r in region.rects)


def _probe_coords(values: Iterable[Fraction]) -> list:
    # grid lines plus the midpoint of every gap between consecutive lines
    vs = sorted(set(values))
    probes = list(vs)
    probes.extend((a + b) / 2 for a, b in zip(vs, vs[1:]))
    return sorted(probes)


def subset_witness(a: Region, b: Region) -> Optional[Point]:
    """A rational point of ``a`` outside ``b``, or None when ``a`` is inside ``b``.

    Probe points are one representative per cell, open edge and vertex of the
    grid generated by all rectangle edges of both regions; each such piece
    lies wholly inside or wholly outside every rectangle, so the answer is
    exact.
    """
    rects = a.rects + b.rects
    xs = _probe_coords([c for r in rects for c in (r.x_lo, r.x_hi)])
    ys = _probe_coords([c for r in rects for c in (r.y_lo, r.y_hi)])
    for ra in a.rects:
        cols = [x for x in xs if ra.x_lo < x < ra.x_hi]
        rows = [y for y in ys if ra.y_lo < y < ra.y_hi]
        for x in cols:
            for y in rows:
                p = Point(x, y)
                if not region_member(b, p):
                    return p
    return None


def region_subset(a: Region, b: Region) -> bool:
    return subset_witness(a, b) is None


def region_intersect(a: Region, b: Region) -> Optional[Region]:
    """Point-set intersection; None when it is empty.

    Rectangles that only share an edge or corner do not intersect.
    """
    pieces = []
    for ra in a.rects:
        for rb in b.rects:
            r = ra.intersect(rb)
            if r is not None:
                pieces.append(r)
    return Region(pieces) if pieces else None


@dataclass(frozen=True)
class RegionMetrics:
    distance: Optional[Fraction]
    diameter: Fraction


def region_distance(region: Region, p: Point, m: Metric) -> Fraction:
    return min(r.distance_to(p, m) for r in region.rects)


def region_diameter(region: Region, m: Metric) -> Fraction:
    best = Fraction(0)
    for r1 in region.rects:
        for r2 in region.rects:
            for c1 in r1.corners():
                for c2 in r2.corners():
                    best = max(best, point_distance(c1, c2, m))
    return best


def region_metrics(region: Region, p: Optional[Point], m: Metric) -> RegionMetrics:
    """Exact distance from ``p`` (if given) and diameter, over the closure."""
    dist = region_distance(region, p, m) if p is not None else None
    return RegionMetrics(distance=dist, diameter=region_diameter(region, m))


def region_expand(region: Region, eps) -> Region:
    """Inflate every rectangle by ``eps`` on all four sides."""
    eps = Q(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    return Region(r.expand(eps) for r in region.rects)
