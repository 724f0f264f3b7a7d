"""Seeded random generators shared by the property and acceptance tests."""

import random
from fractions import Fraction

from pointless.region import Point, Rect, Region
from pointless.riesz import ONE, X, Y, Add, Join, Meet, Scale, Square
from pointless.vietoris import BasicOpen, FinitePointSet


def rand_q(rng, lo=-4, hi=4, den=8):
    return Fraction(rng.randint(lo * den, hi * den), den)


def rand_rect(rng, lo=-3, hi=3, den=4, max_side=2):
    x0 = rand_q(rng, lo, hi, den)
    y0 = rand_q(rng, lo, hi, den)
    w = Fraction(rng.randint(1, max_side * den), den)
    h = Fraction(rng.randint(1, max_side * den), den)
    return Rect(x0, x0 + w, y0, y0 + h)


def rand_small_rect(rng, side, lo=-3, hi=3):
    """Rect with sides at most ``side``, corner on a 1/8 grid."""
    x0, y0 = rand_q(rng, lo, hi), rand_q(rng, lo, hi)
    w = side * Fraction(rng.randint(1, 8), 9)
    h = side * Fraction(rng.randint(1, 8), 9)
    return Rect(x0, x0 + w, y0, y0 + h)


def rand_region(rng, n_max=3, **kw):
    return Region(rand_rect(rng, **kw) for _ in range(rng.randint(1, n_max)))


def rand_point_in(rng, rect, grain=1 << 12):
    fx = Fraction(rng.randrange(1, grain), grain)
    fy = Fraction(rng.randrange(1, grain), grain)
    return Point(rect.x_lo + fx * rect.width, rect.y_lo + fy * rect.height)


def rand_point_in_closure(rng, rect, grain=1 << 12):
    fx = Fraction(rng.randrange(0, grain + 1), grain)
    fy = Fraction(rng.randrange(0, grain + 1), grain)
    return Point(rect.x_lo + fx * rect.width, rect.y_lo + fy * rect.height)


def rand_point_in_region(rng, region):
    return rand_point_in(rng, rng.choice(region.rects))


def rand_term(rng, depth):
    """Random term of depth at most ``depth`` over 1, x, y."""
    if depth == 0 or rng.random() < 0.2:
        return rng.choice([ONE, X, Y])
    kind = rng.choice(["add", "scale", "join", "meet", "square", "join", "meet"])
    if kind == "scale":
        return Scale(Fraction(rng.randint(-6, 6), rng.randint(1, 4)), rand_term(rng, depth - 1))
    if kind == "square":
        return Square(rand_term(rng, depth - 1))
    cls = {"add": Add, "join": Join, "meet": Meet}[kind]
    return cls(rand_term(rng, depth - 1), rand_term(rng, depth - 1))


def rand_normal_open(rng, n_max=3, side=None):
    """Normal-form open with 1..n_max positives, each a single rectangle."""
    if side is None:
        rects = [rand_rect(rng, den=4, max_side=1) for _ in range(rng.randint(1, n_max))]
    else:
        rects = [rand_small_rect(rng, side) for _ in range(rng.randint(1, n_max))]
    return BasicOpen.normal(Region.of(r) for r in rects)


def sample_member(rng, u: BasicOpen, extra=2):
    """A random finite set meeting every positive of ``u`` and inside its negative."""
    pts = []
    for o in u.positive:
        cand = rand_point_in_region(rng, o)
        while not _in(u.negative, cand):
            cand = rand_point_in_region(rng, o)
        pts.append(cand)
    for _ in range(rng.randint(0, extra)):
        cand = rand_point_in_region(rng, u.negative)
        pts.append(cand)
    return FinitePointSet(list(dict.fromkeys(pts)))


def _in(region, p):
    return any(r.contains(p) for r in region.rects)


def fresh_rng(seed):
    return random.Random(seed)
