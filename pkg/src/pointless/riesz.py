"""The Riesz term algebra generated by ``1``, ``x`` and ``y`` (plus squaring).

Terms are immutable trees. They can be evaluated exactly at rational points,
and enclosed over rectangles.

Enclosures combine two sound bounds per node: the natural interval extension
and a first-order affine form ``c + a*x + b*y + sum(k_i * s_i)``. A noise symbol
either stands for ``|d|``, where ``d`` is the affine difference met at an
undecided join or meet, or for the bounded remainder of a square. Joins and meets are rewritten
as ``(a + b)/2 +- |a - b|/2``, so two lattice nodes that compare the same
pair of affine functions share one symbol and cancel exactly. That is what
lets identities such as ``(r & s) + (r | s) == r + s`` be proven to tight
tolerances without subdividing down to the tolerance scale.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from .errors import DepthCapError, PreconditionError
from .numerics import Interval, Q
from .region import Point, Rect, Region

DEFAULT_TOL = Fraction(1, 10**6)
DEFAULT_MAX_DEPTH = 40
# Cap on box evaluations per call so a hopeless tolerance fails fast.
DEFAULT_MAX_BOXES = 200_000


class Term:
    """Base class for Riesz terms. Supports ``+ - * | &`` and ``abs``."""

    __slots__ = ()

    def __add__(self, other):
        return Add(self, _lift(other))

    def __radd__(self, other):
        return Add(_lift(other), self)

    def __neg__(self):
        return Scale(Fraction(-1), self)

    def __sub__(self, other):
        return Add(self, -_lift(other))

    def __rsub__(self, other):
        return Add(_lift(other), -self)

    def __mul__(self, q):
        if isinstance(q, Term):
            raise TypeError("terms are only multiplied by rational scalars")
        return Scale(Q(q), self)

    __rmul__ = __mul__

    def __or__(self, other):
        return Join(self, _lift(other))

    def __and__(self, other):
        return Meet(self, _lift(other))

    def __abs__(self):
        return Join(self, -self)

    def squared(self):
        return Square(self)


def _lift(value) -> Term:
    if isinstance(value, Term):
        return value
    q = Q(value)
    return ONE if q == 1 else Scale(q, ONE)


@dataclass(frozen=True, eq=True)
class Gen(Term):
    name: str  # "one", "x" or "y"

    def __post_init__(self):
        if self.name not in ("one", "x", "y"):
            raise PreconditionError(f"unknown generator {self.name!r}")


@dataclass(frozen=True, eq=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True, eq=True)
class Scale(Term):
    q: Fraction
    arg: Term

    def __post_init__(self):
        object.__setattr__(self, "q", Q(self.q))


@dataclass(frozen=True, eq=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True, eq=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True, eq=True)
class Square(Term):
    arg: Term


ONE = Gen("one")
X = Gen("x")
Y = Gen("y")

RieszTerm = Union[Gen, Add, Scale, Join, Meet, Square]


def const(q) -> Term:
    return _lift(q)


def term_depth(t: Term) -> int:
    if isinstance(t, Gen):
        return 0
    if isinstance(t, (Scale, Square)):
        return 1 + term_depth(t.arg)
    return 1 + max(term_depth(t.left), term_depth(t.right))


def eval_term(t: Term, p: Point) -> Fraction:
    """Exact value of ``t`` at ``p``."""
    if isinstance(t, Gen):
        if t.name == "one":
            return Fraction(1)
        return Fraction(p.x) if t.name == "x" else Fraction(p.y)
    if isinstance(t, Add):
        return eval_term(t.left, p) + eval_term(t.right, p)
    if isinstance(t, Scale):
        return t.q * eval_term(t.arg, p)
    if isinstance(t, Join):
        return max(eval_term(t.left, p), eval_term(t.right, p))
    if isinstance(t, Meet):
        return min(eval_term(t.left, p), eval_term(t.right, p))
    if isinstance(t, Square):
        v = eval_term(t.arg, p)
        return v * v
    raise TypeError(f"not a Riesz term: {t!r}")


def bump_term(o: Rect) -> Term:
    """``(x - x_lo) & (x_hi - x) & (y - y_lo) & (y_hi - y)``; positive exactly on ``o``."""
    return ((X - o.x_lo) & (o.x_hi - X)) & (Y - o.y_lo) & (o.y_hi - Y)


# ---------------------------------------------------------------------------
# affine forms over one box


@dataclass
class _Form:
    """``const + sum(c_v * v)`` over the box variables and noise symbols."""

    const: Fraction
    coeffs: Dict[str, Fraction] = field(default_factory=dict)

    def add(self, other: "_Form") -> "_Form":
        coeffs = dict(self.coeffs)
        for v, c in other.coeffs.items():
            s = coeffs.get(v, 0) + c
            if s:
                coeffs[v] = s
            else:
                coeffs.pop(v, None)
        return _Form(self.const + other.const, coeffs)

    def scale(self, q: Fraction) -> "_Form":
        if q == 0:
            return _Form(Fraction(0))
        return _Form(q * self.const, {v: q * c for v, c in self.coeffs.items()})


class _Box:
    """Evaluation context: variable ranges and the noise symbols made so far.

    Every symbol names one definite function on the box, so two forms built
    from the same symbols can be subtracted exactly.
    """

    def __init__(self, box: Rect):
        self.ranges: Dict[str, Interval] = {
            "x": Interval(box.x_lo, box.x_hi),
            "y": Interval(box.y_lo, box.y_hi),
        }
        self.box = box
        self.symbols: Dict[tuple, str] = {}
        self.fresh_count = 0

    def range(self, f: _Form) -> Interval:
        iv = Interval.point(f.const)
        for v, c in f.coeffs.items():
            iv = iv + self.ranges[v].scale(c)
        return iv

    def fresh(self, base: _Form, residual: Interval) -> _Form:
        """``base`` plus a new symbol ranging over ``residual``."""
        if residual.lo == residual.hi:
            return base.add(_Form(residual.lo))
        name = f"e{self.fresh_count}"
        self.fresh_count += 1
        self.ranges[name] = residual
        return base.add(_Form(Fraction(0), {name: Fraction(1)}))

    def abs_symbol(self, d: _Form, d_range: Interval) -> Tuple[str, Fraction]:
        """Symbol ``s`` and scale ``k > 0`` with ``|d| == k * s`` on this box."""
        lead_var = min(d.coeffs)
        k = abs(d.coeffs[lead_var])
        sign = 1 if d.coeffs[lead_var] > 0 else -1
        factor = Fraction(sign) / k
        key = (factor * d.const,) + tuple(sorted((v, factor * c) for v, c in d.coeffs.items()))
        name = self.symbols.get(key)
        if name is None:
            name = f"|s{len(self.symbols)}|"
            self.symbols[key] = name
            self.ranges[name] = d_range.scale(1 / k).abs()
        return name, k


def _join(ctx: _Box, a: _Form, ia: Interval, b: _Form, ib: Interval) -> Tuple[_Form, Interval]:
    plain = ia.join(ib)
    d = a.add(b.scale(Fraction(-1)))
    rd = ctx.range(d).intersect(ia - ib) or ctx.range(d)
    if rd.lo >= 0:
        return a, ia
    if rd.hi <= 0:
        return b, ib
    name, k = ctx.abs_symbol(d, rd)
    out = a.add(b).scale(Fraction(1, 2)).add(_Form(Fraction(0), {name: k / 2}))
    return out, plain


def _square(ctx: _Box, a: _Form, ia: Interval) -> Tuple[_Form, Interval]:
    plain = ia.square()
    ra = ctx.range(a).intersect(ia) or ctx.range(a)
    m = ra.mid
    # a^2 = 2m*a - m^2 + (a - m)^2 with the last term bounded by interval squaring
    rest = Interval(ra.lo - m, ra.hi - m).square()
    return ctx.fresh(a.scale(2 * m).add(_Form(-m * m)), rest), plain


def _intern(t: Term, table: dict) -> Term:
    """Rebuild ``t`` so structurally equal subterms are one object."""
    if isinstance(t, Gen):
        key = (Gen, t.name)
    elif isinstance(t, (Scale,)):
        key = (Scale, t.q, id(_intern(t.arg, table)))
    elif isinstance(t, Square):
        key = (Square, id(_intern(t.arg, table)))
    elif isinstance(t, (Add, Join, Meet)):
        key = (type(t), id(_intern(t.left, table)), id(_intern(t.right, table)))
    else:
        raise TypeError(f"not a Riesz term: {t!r}")
    hit = table.get(key)
    if hit is not None:
        return hit
    if isinstance(t, Gen):
        node = t
    elif isinstance(t, Scale):
        node = Scale(t.q, table[key[2]])
    elif isinstance(t, Square):
        node = Square(table[key[1]])
    else:
        node = type(t)(table[key[1]], table[key[2]])
    table[key] = node
    table[id(node)] = node
    return node


def _eval_box(t: Term, ctx: _Box, memo: dict) -> Tuple[_Form, Interval]:
    key = id(t)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if isinstance(t, Gen):
        if t.name == "one":
            res = (_Form(Fraction(1)), Interval(1, 1))
        else:
            res = (_Form(Fraction(0), {t.name: Fraction(1)}), ctx.ranges[t.name])
    elif isinstance(t, Add):
        fa, ia = _eval_box(t.left, ctx, memo)
        fb, ib = _eval_box(t.right, ctx, memo)
        res = (fa.add(fb), ia + ib)
    elif isinstance(t, Scale):
        fa, ia = _eval_box(t.arg, ctx, memo)
        res = (fa.scale(t.q), ia.scale(t.q))
    elif isinstance(t, Join):
        fa, ia = _eval_box(t.left, ctx, memo)
        fb, ib = _eval_box(t.right, ctx, memo)
        res = _join(ctx, fa, ia, fb, ib)
    elif isinstance(t, Meet):
        # a & b == -((-a) | (-b))
        fa, ia = _eval_box(t.left, ctx, memo)
        fb, ib = _eval_box(t.right, ctx, memo)
        fj, ij = _join(ctx, fa.scale(Fraction(-1)), -ia, fb.scale(Fraction(-1)), -ib)
        res = (fj.scale(Fraction(-1)), -ij)
    elif isinstance(t, Square):
        fa, ia = _eval_box(t.arg, ctx, memo)
        res = _square(ctx, fa, ia)
    else:
        raise TypeError(f"not a Riesz term: {t!r}")
    form, plain = res
    tight = ctx.range(form).intersect(plain)
    if tight is None:  # pragma: no cover - both bounds are sound
        raise AssertionError("affine and interval bounds disagree")
    res = (form, tight)
    memo[key] = res
    return res


def box_enclosure(t: Term, box: Rect) -> Interval:
    """One-shot enclosure of ``t`` over the closure of ``box`` (no subdivision)."""
    return _eval_box(_intern(t, {}), _Box(box), {})[1]


def _boxer(t: Term) -> Callable[[Rect], Interval]:
    shared = _intern(t, {})
    return lambda box: _eval_box(shared, _Box(box), {})[1]


def enclosure(
    t: Term,
    box: Rect,
    tol=DEFAULT_TOL,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_boxes: int = DEFAULT_MAX_BOXES,
) -> Interval:
    """Enclosure of ``t`` over ``box``, bisecting boxes wider than ``tol``.

    A box is kept as a leaf once its enclosure is at most ``tol`` wide or it
    sits at ``max_depth``; the result is the hull of the leaves. Boxes whose
    enclosure already lies between values exactly attained at probe points
    cannot widen that hull and are not split further. The width can exceed
    ``tol`` when the depth cap or box budget is hit.
    """
    tol = Q(tol)
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    encl = _boxer(t)
    seen = _probe_values(t, box)
    att_lo, att_hi = min(seen), max(seen)
    stack = [(box, 0, encl(box))]
    lo, hi = att_lo, att_hi
    evaluated = 1
    while stack:
        b, depth, iv = stack.pop()
        if att_lo <= iv.lo and iv.hi <= att_hi:
            continue
        if iv.width <= tol or depth >= max_depth or evaluated >= max_boxes:
            lo, hi = min(lo, iv.lo), max(hi, iv.hi)
            continue
        for child in reversed(b.split()):
            v = eval_term(t, child.center)
            att_lo, att_hi = min(att_lo, v), max(att_hi, v)
            stack.append((child, depth + 1, encl(child)))
            evaluated += 1
    # pruned boxes are covered by the attained range, which kept growing
    return Interval(min(lo, att_lo), max(hi, att_hi))


@dataclass(frozen=True)
class NormCut:
    """Rational enclosure of ``sup t`` over (the closure of) ``region``."""

    sup_enclosure: Interval
    region: Region
    tol: Fraction

    @property
    def lo(self) -> Fraction:
        return self.sup_enclosure.lo

    @property
    def hi(self) -> Fraction:
        return self.sup_enclosure.hi


def _probe_values(t: Term, box: Rect) -> List[Fraction]:
    return [eval_term(t, p) for p in box.corners() + (box.center,)]


def sup_enclosure(
    t: Term,
    region: Region,
    tol=DEFAULT_TOL,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_boxes: int = DEFAULT_MAX_BOXES,
) -> NormCut:
    """Branch and bound for ``sup t`` over the region, to width ``tol``.

    The lower end is the best of the lower enclosure bounds and the exact
    values at box corners and centres seen so far (any value attained on the
    closure bounds the supremum from below); the upper end is the largest
    upper bound among the boxes still open. Raises
    :class:`DepthCapError` when ``tol`` cannot be met within the caps.
    """
    tol = Q(tol)
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    encl = _boxer(t)
    heap: list = []
    counter = 0
    best_lo: Optional[Fraction] = None
    for r in region.rects:
        iv = encl(r)
        probe = max(_probe_values(t, r))
        best_lo = max(iv.lo, probe) if best_lo is None else max(best_lo, iv.lo, probe)
        heapq.heappush(heap, (-iv.hi, counter, r, 0))
        counter += 1
    evaluated = counter
    while True:
        neg_hi, _, b, depth = heap[0]
        top_hi = -neg_hi
        if top_hi - best_lo <= tol:
            return NormCut(Interval(best_lo, top_hi), region, tol)
        if depth >= max_depth or evaluated >= max_boxes:
            raise DepthCapError(
                f"sup enclosure stuck at width {top_hi - best_lo} > tol {tol} "
                f"(depth {depth}, {evaluated} boxes)"
            )
        heapq.heappop(heap)
        for child in b.split():
            iv = encl(child)
            evaluated += 1
            best_lo = max(best_lo, iv.lo, eval_term(t, child.center))
            heapq.heappush(heap, (-iv.hi, counter, child, depth + 1))
            counter += 1


def inf_enclosure(t: Term, region: Region, tol=DEFAULT_TOL, **caps) -> Interval:
    """Enclosure of ``inf t`` over the region, as ``-sup(-t)``."""
    cut = sup_enclosure(-t, region, tol, **caps)
    return -cut.sup_enclosure


# ---------------------------------------------------------------------------
# equality on a region


@dataclass(frozen=True)
class ProvenWithin:
    """``|r - s| <= tol`` was proven on every rectangle of the region."""

    tol: Fraction


@dataclass(frozen=True)
class RefutedAt:
    """Exact evaluation differs at ``point``."""

    point: Point
    r_value: Fraction
    s_value: Fraction


@dataclass(frozen=True)
class Unknown:
    reason: str


EqVerdict = Union[ProvenWithin, RefutedAt, Unknown]


def _random_point(rect: Rect, rng: random.Random, grain: int = 1 << 16) -> Point:
    fx = Fraction(rng.randrange(1, grain), grain)
    fy = Fraction(rng.randrange(1, grain), grain)
    return Point(rect.x_lo + fx * rect.width, rect.y_lo + fy * rect.height)


def equal_on_region(
    r: Term,
    s: Term,
    region: Region,
    tol=DEFAULT_TOL,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_boxes: int = DEFAULT_MAX_BOXES,
    seed: int = 0,
    samples: int = 256,
) -> EqVerdict:
    """Three-valued decision of ``r == s`` on ``region``.

    Boxes are refined breadth first. A box whose enclosure of ``|r - s|``
    stays above 0 yields an exact refutation at its centre; if every box ends
    up below ``tol`` the equality is proven within ``tol``. Otherwise a seeded
    random search looks for a refuting point before settling on Unknown.
    """
    tol = Q(tol)
    if tol <= 0:
        raise PreconditionError("tol must be positive")
    gap = abs(r - s)
    encl = _boxer(gap)
    stuck: List[Rect] = []
    evaluated = 0
    for rect in region.rects:
        queue = deque([(rect, 0)])
        while queue:
            b, depth = queue.popleft()
            iv = encl(b)
            evaluated += 1
            if iv.hi <= tol:
                continue
            if iv.lo > 0:
                c = b.center
                rv, sv = eval_term(r, c), eval_term(s, c)
                assert rv != sv  # enclosure soundness
                return RefutedAt(c, rv, sv)
            if depth >= max_depth or evaluated >= max_boxes:
                stuck.append(b)
                continue
            queue.extend((child, depth + 1) for child in b.split())
    if not stuck:
        return ProvenWithin(tol)
    rng = random.Random(seed)
    candidates = [b.center for b in stuck]
    for _ in range(samples):
        candidates.append(_random_point(rng.choice(region.rects), rng))
    for c in candidates:
        rv, sv = eval_term(r, c), eval_term(s, c)
        if rv != sv:
            return RefutedAt(c, rv, sv)
    return Unknown(f"{len(stuck)} boxes undecided at the depth/box cap")
