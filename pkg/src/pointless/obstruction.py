"""Machine-checkable evidence that no point selector exists.

Two harnesses, both finite and exact:

* :func:`sqrt_monodromy` follows the square root of ``w`` continuously once
  around a circle centred at 0 and certifies that it comes back on the other
  root. A square root forced in some neighbourhood of 0 would have to be a
  continuous single-valued branch on that circle, which is impossible. The
  same argument translated to any centre ``v`` handles ``X^2 - (G - v)``, so
  no non-empty open forces every polynomial to have a root; that part is not
  mechanized.
* :func:`antipodal_sweep` rotates an antipodal pair of points half a turn round
  a small disc inside one separating box and asks a selector which of the two
  the hypothetical point is closer to. Continuity forces the selector to
  follow its label, but after half a turn the pair is the same set with the
  labels exchanged, so some constraint always breaks. :func:`antipodal_unsat`
  checks that parity contradiction by brute force.

Circles appear only here. Points on them come from the tangent half-angle
parametrization, which is exact for rational radii.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, List, Optional, Sequence, Tuple, Union

from .errors import PreconditionError, ResolutionError
from .numerics import Interval, Q, exact_sqrt, rational_sqrt_enclosure, sqrt_interval
from .region import Metric, Point, point_distance
from .vietoris import FinitePointSet, separation_radius

DEFAULT_TOL = Fraction(1, 10**9)
# Denominator bound for rational tangent parameters.
PARAM_DENOMINATOR = 10**6
UNSAT_CAP = 20

IntervalPair = Tuple[Interval, Interval]


@dataclass(frozen=True)
class CircleParam:
    """Point of the circle ``|p - center|^2 == radius_sq`` at tangent parameter ``t``.

    ``t = tan(angle / 2)``; None stands for the parameter at infinity (angle pi).
    """

    center: Point
    radius_sq: Fraction
    t: Optional[Fraction]

    def __post_init__(self):
        object.__setattr__(self, "radius_sq", Q(self.radius_sq))
        if self.t is not None:
            object.__setattr__(self, "t", Q(self.t))
        if self.radius_sq <= 0:
            raise PreconditionError("radius_sq must be positive")


def unit_point(t: Optional[Fraction]) -> Point:
    if t is None:
        return Point(Fraction(-1), Fraction(0))
    t = Q(t)
    s = 1 + t * t
    return Point((1 - t * t) / s, 2 * t / s)


def circle_point(c: CircleParam, tol=DEFAULT_TOL) -> Union[Point, IntervalPair]:
    """Exact point when the radius is rational, an interval pair otherwise."""
    u = unit_point(c.t)
    r = exact_sqrt(c.radius_sq)
    if r is not None:
        return Point(c.center.x + r * u.x, c.center.y + r * u.y)
    ri = rational_sqrt_enclosure(c.radius_sq, tol)
    return (
        ri.scale(u.x) + Interval.point(c.center.x),
        ri.scale(u.y) + Interval.point(c.center.y),
    )


def half_turn_params(steps: int, turns: Fraction) -> List[Optional[Fraction]]:
    """Rational tangent parameters for angles ``turns * 2pi * k / steps``, k = 0..steps.

    The angles are only approximately equal-spaced; every bound downstream is
    computed from the exact points these parameters produce.
    """
    params: List[Optional[Fraction]] = []
    for k in range(steps + 1):
        half = Fraction(k, steps) * turns  # (angle / 2) / pi
        if half.denominator == 1:
            params.append(Fraction(0))
        elif half.denominator == 2:
            params.append(None)
        else:
            tan = math.tan(math.pi * float(half))
            params.append(Fraction(tan).limit_denominator(PARAM_DENOMINATOR))
    return params


# ---------------------------------------------------------------------------
# square-root monodromy


def _dist_sq(p: IntervalPair, q: IntervalPair) -> Interval:
    return (p[0] - q[0]).square() + (p[1] - q[1]).square()


def _neg_pair(p: IntervalPair) -> IntervalPair:
    return (-p[0], -p[1])


def _principal_root(w: Point, modulus: Fraction, tol) -> IntervalPair:
    re = rational_sqrt_enclosure((modulus + w.x) / 2, tol)
    im = rational_sqrt_enclosure((modulus - w.x) / 2, tol)
    return (re, im if w.y >= 0 else -im)


@dataclass(frozen=True)
class MonodromyStep:
    k: int
    t: Optional[Fraction]
    w: Point
    root: IntervalPair
    flipped: bool  # selected root is minus the principal one


@dataclass(frozen=True)
class MonodromyCertificate:
    start_root: IntervalPair
    end_root: IntervalPair
    separation: Interval
    consistency_bound: Fraction
    steps: int
    radius_sq: Fraction
    trace: Tuple[MonodromyStep, ...] = field(repr=False)

    @property
    def valid(self) -> bool:
        return self.separation.lo > self.consistency_bound


def sqrt_monodromy(radius_sq, steps: int = 64, tol=DEFAULT_TOL) -> MonodromyCertificate:
    """Track a square root of ``w`` once round the circle ``|w| == radius_sq``.

    ``radius_sq`` is the circle's radius, written as a square ``eps^2`` because
    the roots then have modulus ``eps`` and sit ``2 * eps`` apart. At each
    step both roots are enclosed and the one nearer the previous choice is
    kept. The certificate is valid when the end root is further than ``eps``
    from the start root on the same ``w``, i.e. the branch came back on the
    other root.
    """
    rho = Q(radius_sq)
    if rho <= 0:
        raise PreconditionError("radius_sq must be positive")
    if steps < 8:
        raise PreconditionError("need at least 8 steps to tell the roots apart")
    tol = Q(tol)
    trace: List[MonodromyStep] = []
    prev: Optional[IntervalPair] = None
    for k, t in enumerate(half_turn_params(steps, Fraction(1))):
        w = circle_point(CircleParam(Point(Fraction(0), Fraction(0)), rho * rho, t))
        cand = _principal_root(w, rho, tol)
        flipped = False
        if prev is not None:
            near, far = _dist_sq(prev, cand), _dist_sq(prev, _neg_pair(cand))
            if far.hi < near.lo:
                flipped = True
            elif not near.hi < far.lo:
                raise ResolutionError(
                    f"step {k}: root enclosures too wide at tol {tol}",
                    required_tol=tol / 1024,
                )
        root = _neg_pair(cand) if flipped else cand
        trace.append(MonodromyStep(k, t, w, root, flipped))
        prev = root
    start, end = trace[0].root, trace[-1].root
    separation = sqrt_interval(_dist_sq(start, end), tol)
    eps_hi = rational_sqrt_enclosure(rho, tol).hi
    return MonodromyCertificate(start, end, separation, eps_hi, steps, rho, tuple(trace))


# ---------------------------------------------------------------------------
# antipodal sweep


@dataclass(frozen=True)
class SweepConfig:
    """Half-turn sweep of an antipodal pair on a disc of radius ``iota``.

    The disc has ``base.points[target_index]`` as its right-most point and
    must fit inside that point's separating box.
    """

    base: FinitePointSet
    target_index: int
    iota: Fraction
    steps: int

    def __post_init__(self):
        object.__setattr__(self, "iota", Q(self.iota))
        if not 0 <= self.target_index < len(self.base):
            raise PreconditionError("target_index out of range")
        if self.iota <= 0:
            raise PreconditionError("iota must be positive")
        if self.steps < 4:
            raise PreconditionError("need at least 4 steps")
        if not 2 * self.iota < separation_radius(self.base):
            raise PreconditionError("disc of radius iota does not fit in the target box")

    @property
    def target(self) -> Point:
        return self.base.points[self.target_index]

    @property
    def disc_center(self) -> Point:
        z0 = self.target
        return Point(z0.x - self.iota, z0.y)


@dataclass(frozen=True)
class SweepStep:
    k: int
    t: Optional[Fraction]
    pair: Tuple[Point, Point]  # (z_theta, z_theta+pi)
    members: FinitePointSet  # B_theta
    choice: int
    chosen: Point


@dataclass(frozen=True)
class SelectorViolation:
    """First broken constraint of a selector's run.

    ``kind`` is ``"discontinuity"`` (choices at ``step`` and ``step + 1`` are
    further apart than the continuity threshold) or ``"wraparound"`` (the last
    member set equals the first but a different point was chosen).
    """

    kind: str
    step: int
    detail: dict
    threshold_sq: Fraction
    trace: Tuple[SweepStep, ...] = field(repr=False)


Selector = Callable[[int, Tuple[Point, Point]], int]


def sweep_steps(cfg: SweepConfig) -> List[Tuple[Optional[Fraction], Tuple[Point, Point], FinitePointSet]]:
    c = cfg.disc_center
    others = [p for i, p in enumerate(cfg.base.points) if i != cfg.target_index]
    out = []
    for t in half_turn_params(cfg.steps, Fraction(1, 2)):
        z = circle_point(CircleParam(c, cfg.iota * cfg.iota, t))
        opposite = Point(2 * c.x - z.x, 2 * c.y - z.y)
        out.append((t, (z, opposite), FinitePointSet(others + [z, opposite])))
    return out


def continuity_threshold_sq(pairs: Sequence[Tuple[Point, Point]]) -> Fraction:
    """Square of twice the largest chord between consecutive rotated points."""
    chord_sq = max(
        point_distance(a[0], b[0], Metric.L2SQ) for a, b in zip(pairs, pairs[1:])
    )
    return 4 * chord_sq


def antipodal_sweep(selector: Selector, cfg: SweepConfig) -> SelectorViolation:
    """Run ``selector`` over the sweep and return its first violated constraint."""
    steps = sweep_steps(cfg)
    pairs = [pair for _, pair, _ in steps]
    threshold = continuity_threshold_sq(pairs)
    for a, b in zip(pairs, pairs[1:]):
        # switching label between neighbouring steps must always read as a jump
        if not point_distance(a[0], b[1], Metric.L2SQ) > threshold:
            raise PreconditionError("too few steps: label switches are not detectable")
    trace: List[SweepStep] = []
    for k, (t, pair, members) in enumerate(steps):
        choice = selector(k, pair)
        if choice not in (0, 1):
            raise PreconditionError(f"selector returned {choice!r} at step {k}")
        trace.append(SweepStep(k, t, pair, members, choice, pair[choice]))
    trace_t = tuple(trace)
    for a, b in zip(trace, trace[1:]):
        jump = point_distance(a.chosen, b.chosen, Metric.L2SQ)
        if jump > threshold:
            detail = {"steps": [a.k, b.k], "choices": [a.choice, b.choice], "jump_sq": jump}
            return SelectorViolation("discontinuity", a.k, detail, threshold, trace_t)
    first, last = trace[0], trace[-1]
    assert last.members.same_set(first.members)
    assert first.chosen != last.chosen  # no jumps means the label was kept
    detail = {"steps": [first.k, last.k], "choices": [first.choice, last.choice]}
    return SelectorViolation("wraparound", last.k, detail, threshold, trace_t)


def verify_violation(v: SelectorViolation) -> bool:
    """Re-check a violation using only the data recorded in its trace."""
    trace = v.trace
    for s in trace:
        if s.chosen != s.pair[s.choice]:
            return False
        if set(s.pair) - set(s.members.points):
            return False
    pairs = [s.pair for s in trace]
    if continuity_threshold_sq(pairs) != v.threshold_sq:
        return False
    if v.kind == "discontinuity":
        a, b = trace[v.step], trace[v.step + 1]
        return point_distance(a.chosen, b.chosen, Metric.L2SQ) > v.threshold_sq
    if v.kind == "wraparound":
        first, last = trace[0], trace[-1]
        continuous = all(
            point_distance(a.chosen, b.chosen, Metric.L2SQ) <= v.threshold_sq
            for a, b in zip(trace, trace[1:])
        )
        return continuous and first.members.same_set(last.members) and first.chosen != last.chosen
    return False


def constant_selector(choice: int = 0) -> Selector:
    return lambda k, pair: choice


def flip_selector(at: int) -> Selector:
    """Choose 0 before step ``at`` and 1 from then on."""
    return lambda k, pair: 0 if k < at else 1


def larger_real_part_selector(k: int, pair: Tuple[Point, Point]) -> int:
    return 0 if pair[0].x >= pair[1].x else 1


def random_selector(seed: int) -> Selector:
    rng = random.Random(seed)
    cache: dict = {}

    def select(k, pair):
        if k not in cache:
            cache[k] = rng.randrange(2)
        return cache[k]

    return select


@dataclass(frozen=True)
class UnsatRecord:
    n: int
    checked: int
    satisfying: int


def antipodal_unsat(n: int, cap: int = UNSAT_CAP) -> UnsatRecord:
    """Count assignments ``c_0..c_n`` that keep every label yet swap at the end.

    The constraints are ``c_{k+1} == c_k`` for all k and ``c_n != c_0``.
    """
    if n < 1:
        raise PreconditionError("n must be at least 1")
    if n > cap:
        raise PreconditionError(f"n = {n} exceeds the brute-force cap {cap}")
    checked = satisfying = 0
    for c in product((0, 1), repeat=n + 1):
        checked += 1
        if all(c[k + 1] == c[k] for k in range(n)) and c[n] != c[0]:
            satisfying += 1
    return UnsatRecord(n, checked, satisfying)
