"""What basic opens force about terms of the Riesz algebra.

Everything here is a finite computation over the information carried by a
:class:`~pointless.vietoris.BasicOpen`: equalities are decided on the negative
region, and the supremum of a term is pinned between per-positive infima and
the supremum over the union of the positives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import DepthCapError, PreconditionError
from .numerics import Q
from .region import Point, Rect, Region
from .riesz import (
    DEFAULT_TOL,
    EqVerdict,
    Join,
    Term,
    bump_term,
    enclosure,
    equal_on_region,
    eval_term,
    inf_enclosure,
    sup_enclosure,
)
from .vietoris import BasicOpen, FinitePointSet, separation_radius

MAX_SHRINK_STEPS = 64


@dataclass(frozen=True)
class ForcedInterval:
    lo: Fraction
    hi: Fraction
    open: BasicOpen
    term: Term

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("forced interval with lo > hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _require_normal(u: BasicOpen) -> None:
    if not u.is_normal:
        raise PreconditionError(
            "basic open is not in normal form; refine it around a member first"
        )


def forces_equal(u: BasicOpen, r: Term, s: Term, tol=DEFAULT_TOL, **kwargs) -> EqVerdict:
    """Decide ``U forces r = s``, i.e. ``r == s`` on the negative region."""
    return equal_on_region(r, s, u.negative, tol, **kwargs)


def forced_sup_interval(u: BasicOpen, r: Term, tol=DEFAULT_TOL, **caps) -> ForcedInterval:
    """Bounds on ``sup r`` that hold for every member of a normal-form open.

    A member meets each positive, so its maximum is at least the largest
    per-positive infimum; it lies in the union, so its maximum is at most the
    supremum over the union. Each side is computed to within ``tol``.
    """
    _require_normal(u)
    tol = Q(tol)
    lo = max(inf_enclosure(r, o, tol, **caps).lo for o in u.positive)
    hi = sup_enclosure(r, u.positive_union, tol, **caps).hi
    return ForcedInterval(lo, hi, u, r)


def normability_refine(
    a: FinitePointSet,
    r: Term,
    eps,
    max_depth: int = 4,
    max_shrinks: int = MAX_SHRINK_STEPS,
) -> BasicOpen:
    """Normal-form open around ``a`` with disjoint boxes on which ``r`` varies less than ``eps``.

    Starts from the separating boxes and halves each box until the enclosure
    of ``r`` on it is narrower than ``eps``.
    """
    eps = Q(eps)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    start = separation_radius(a)
    boxes: List[Region] = []
    for p in a:
        radius = start
        for _ in range(max_shrinks):
            box = Rect.around(p, radius)
            if enclosure(r, box, eps / 4, max_depth).width < eps:
                break
            radius /= 2
        else:
            raise DepthCapError(f"could not make {r!r} vary less than {eps} around {p}")
        boxes.append(Region.of(box))
    return BasicOpen.normal(boxes)


@dataclass(frozen=True)
class HomCheck:
    """Result of evaluating the joined bump terms at one point.

    ``index`` is the first rectangle whose bump is positive at the point, or
    None when the join is ``<= 0`` and the point lies outside every rectangle.
    """

    point: Point
    join_value: Fraction
    bump_values: tuple
    index: Optional[int]

    @property
    def outside(self) -> bool:
        return self.index is None


def point_eval_hom_check(z: Point, rects: Sequence[Rect]) -> HomCheck:
    """Push the point evaluation at ``z`` through the join of the bump terms.

    Point evaluation preserves joins, so a positive join value singles out a
    rectangle with a positive bump, and that rectangle contains ``z``.
    """
    if not rects:
        raise PreconditionError("need at least one rectangle")
    bumps = [bump_term(o) for o in rects]
    joined = bumps[0]
    for b in bumps[1:]:
        joined = Join(joined, b)
    join_value = eval_term(joined, z)
    values = tuple(eval_term(b, z) for b in bumps)
    assert join_value == max(values)
    index = None
    if join_value > 0:
        index = next(i for i, v in enumerate(values) if v > 0)
        assert rects[index].contains(z)
    return HomCheck(z, join_value, values, index)
