"""Finite planar point sets and the basic opens of their Vietoris topology.

A basic open carries positive information (regions the set must meet) and one
piece of negative information (a region the set must lie inside).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from .errors import PreconditionError
from .region import (
    Metric,
    Point,
    Rect,
    Region,
    point_distance,
    region_intersect,
    region_member,
    union_of,
)

# Half-width of the separating box around a lone point.
SINGLETON_RADIUS = Fraction(1)


@dataclass(frozen=True)
class FinitePointSet:
    """Non-empty list of pairwise distinct rational points."""

    points: Tuple[Point, ...]

    def __init__(self, points: Iterable[Point]):
        pts = tuple(Point(*p) for p in points)
        if not pts:
            raise PreconditionError("a finite point set must be non-empty")
        if len(set(pts)) != len(pts):
            raise PreconditionError("points of a finite set must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def same_set(self, other: "FinitePointSet") -> bool:
        return set(self.points) == set(other.points)


@dataclass(frozen=True)
class BasicOpen:
    """``U_{{O_i}, N}``: members meet every ``O_i`` and lie inside ``N``."""

    positive: Tuple[Region, ...]
    negative: Region

    def __init__(self, positive: Iterable[Region], negative: Region):
        pos = tuple(positive)
        if not pos:
            raise PreconditionError("a basic open needs at least one positive region")
        object.__setattr__(self, "positive", pos)
        object.__setattr__(self, "negative", negative)

    @classmethod
    def normal(cls, positive: Iterable[Region]) -> "BasicOpen":
        """The normal-form open whose negative region is the union of ``positive``."""
        pos = tuple(positive)
        if not pos:
            raise PreconditionError("a basic open needs at least one positive region")
        return cls(pos, union_of(pos))

    @property
    def positive_union(self) -> Region:
        return union_of(self.positive)

    @property
    def is_normal(self) -> bool:
        return self.negative.same_points(self.positive_union)


def vietoris_member(a: FinitePointSet, u: BasicOpen) -> bool:
    if not all(region_member(u.negative, p) for p in a):
        return False
    return all(any(region_member(o, p) for p in a) for o in u.positive)


def separation_radius(a: FinitePointSet) -> Fraction:
    """A third of the least pairwise L-infinity gap (1 for a singleton)."""
    if len(a) == 1:
        return SINGLETON_RADIUS
    delta = min(point_distance(p, q, Metric.LINF) for p, q in combinations(a.points, 2))
    return delta / 3


def separated_neighborhood(a: FinitePointSet) -> BasicOpen:
    """Normal-form open around ``a`` with one box per point, boxes pairwise disjoint."""
    r = separation_radius(a)
    return BasicOpen.normal(Region.of(Rect.around(p, r)) for p in a)


def normal_form_refinement(u: BasicOpen, a: FinitePointSet) -> BasicOpen:
    """A normal-form open ``V`` with ``a in V`` and ``V`` inside ``u``.

    Positives of ``V`` are each ``O_i`` cut down to ``N`` together with the
    separating box of every point of ``a`` cut down to ``N``.
    """
    if not vietoris_member(a, u):
        raise PreconditionError("the point set is not a member of the basic open")
    pieces: List[Region] = []
    for o in u.positive:
        piece = region_intersect(o, u.negative)
        assert piece is not None  # a meets o inside N
        pieces.append(piece)
    for box in separated_neighborhood(a).positive:
        piece = region_intersect(box, u.negative)
        assert piece is not None  # contains its own point
        pieces.append(piece)
    return BasicOpen.normal(pieces)


def compatible(u: BasicOpen, v: BasicOpen) -> Optional[FinitePointSet]:
    """A point set lying in both opens, or None if they are disjoint.

    Each positive of either open is cut down to ``N_u & N_v``; the centre of
    the first rectangle of each cut is taken as its witness point. The opens
    share a member exactly when every cut is non-empty, so None is a proof of
    disjointness rather than a search timeout.
    """
    shared = region_intersect(u.negative, v.negative)
    if shared is None:
        return None
    chosen: List[Point] = []
    for o in u.positive + v.positive:
        cut = region_intersect(o, shared)
        if cut is None:
            return None
        c = cut.rects[0].center
        if c not in chosen:
            chosen.append(c)
    return FinitePointSet(chosen)
