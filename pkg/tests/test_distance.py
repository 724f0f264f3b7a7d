import random
from fractions import Fraction

import pytest

from helpers import rand_normal_open, rand_point_in, rand_q, sample_member
from pointless.distance import (
    DistanceInterval,
    DistanceOracle,
    distance_term,
    forced_distance_interval,
    grid_points,
    recover_positive_info,
)
from pointless.errors import PreconditionError
from pointless.numerics import rational_sqrt_enclosure
from pointless.region import (
    Metric,
    Point,
    Rect,
    Region,
    point_distance,
    region_diameter,
    region_expand,
    region_member,
    region_subset,
)
from pointless.riesz import eval_term
from pointless.vietoris import BasicOpen

F = Fraction
O = Point.of(0, 0)
TOL = F(1, 1000)
STRIP = Region.of(Rect(1, 2, 0, 1))


class TestDistanceTerm:
    def test_taxicab(self):
        assert eval_term(distance_term(O, Metric.L1), Point.of(3, -4)) == 7

    def test_squared(self):
        assert eval_term(distance_term(O, Metric.L2SQ), Point.of(3, -4)) == 25

    def test_self(self):
        z = Point.of(1, 1)
        assert eval_term(distance_term(z, Metric.L1), z) == 0

    def test_linf_rejected(self):
        with pytest.raises(PreconditionError):
            distance_term(O, Metric.LINF)

    def test_matches_point_distance(self):
        rng = random.Random(30)
        for _ in range(200):
            z, p = Point(rand_q(rng), rand_q(rng)), Point(rand_q(rng), rand_q(rng))
            for m in (Metric.L1, Metric.L2SQ):
                assert eval_term(distance_term(z, m), p) == point_distance(z, p, m)


class TestForcedDistance:
    def test_worked_example_is_exact(self):
        iv = forced_distance_interval(BasicOpen.normal([STRIP]), O, Metric.L1, F(1, 10**6))
        assert (iv.lo, iv.hi) == (1, 3)

    def test_far_second_positive(self):
        u = BasicOpen.normal([STRIP, Region.of(Rect(10, 11, 0, 1))])
        iv = forced_distance_interval(u, O, Metric.L1, TOL)
        assert (iv.lo, iv.hi) == (1, 3)

    @pytest.mark.parametrize("metric", [Metric.L1, Metric.L2SQ, Metric.L2])
    def test_inside_has_zero_lower_end(self, metric):
        u = BasicOpen.normal([Region.of(Rect(-1, 1, -1, 1))])
        assert forced_distance_interval(u, O, metric, TOL).lo == 0

    def test_euclidean_brackets_square_roots(self):
        iv = forced_distance_interval(BasicOpen.normal([STRIP]), O, Metric.L2, TOL)
        assert iv.lo == 1
        # sup of the squared distance over the strip is 5
        assert iv.hi**2 >= 5 and iv.hi - rational_sqrt_enclosure(5, TOL).lo <= 2 * TOL

    def test_normal_form_required(self):
        u = BasicOpen([STRIP], Region.of(Rect(0, 3, -1, 2)))
        with pytest.raises(PreconditionError):
            forced_distance_interval(u, O, Metric.L1, TOL)

    def test_member_distances_inside(self):
        rng = random.Random(31)
        for _ in range(30):
            u = rand_normal_open(rng)
            z = Point(rand_q(rng), rand_q(rng))
            for m in (Metric.L1, Metric.L2SQ):
                iv = forced_distance_interval(u, z, m, TOL)
                for _ in range(50):
                    a = sample_member(rng, u)
                    d = min(point_distance(z, p, m) for p in a)
                    assert iv.lo - TOL <= d <= iv.hi + TOL

    def test_width_bound(self):
        rng = random.Random(32)
        for _ in range(50):
            eps = F(rng.randint(1, 8), 8)
            u = rand_normal_open(rng, side=eps / 2)
            assert all(region_diameter(o, Metric.L1) < eps for o in u.positive)
            z = Point(rand_q(rng), rand_q(rng))
            assert forced_distance_interval(u, z, Metric.L1, TOL).width <= eps + TOL

    def test_nested_along_refinements(self):
        rng = random.Random(33)
        for _ in range(8):
            u = rand_normal_open(rng)
            zs = [Point(rand_q(rng), rand_q(rng)) for _ in range(5)]
            prev = [forced_distance_interval(u, z, Metric.L1, TOL) for z in zs]
            for _ in range(4):
                u = _shrink(rng, u)
                cur = [forced_distance_interval(u, z, Metric.L1, TOL) for z in zs]
                for a, b in zip(prev, cur):
                    assert a.lo - TOL <= b.lo and b.hi <= a.hi + TOL
                prev = cur


def _shrink(rng, u):
    subs = []
    for o in u.positive:
        r = o.rects[0]
        c = rand_point_in(rng, r)
        half = min(c.x - r.x_lo, r.x_hi - c.x, c.y - r.y_lo, r.y_hi - c.y)
        subs.append(Region.of(Rect.around(c, half)))
    return BasicOpen.normal(subs)


class TestOracle:
    def test_canonical_oracle(self):
        u = BasicOpen.normal([STRIP])
        oracle = DistanceOracle.from_open(u, Metric.L1, TOL)
        assert oracle(O) == forced_distance_interval(u, O, Metric.L1, TOL)

    def test_bad_interval_rejected(self):
        with pytest.raises(ValueError):
            DistanceInterval(F(2), F(1), Metric.L1)

    def test_grid_points(self):
        pts = list(grid_points(Rect(-1, 1, -1, 1), F(1, 8)))
        assert len(pts) == 17 * 17
        assert pts[0] == Point.of(-1, -1) and pts[-1] == Point.of(1, 1)


class TestRecover:
    window = Rect(-1, 1, -1, 1)
    pitch = F(1, 8)

    def test_small_box(self):
        q = F(1, 4)
        box = Region.of(Rect(-q, q, -q, q))
        eps = F(1, 2)
        oracle = DistanceOracle.from_open(BasicOpen.normal([box]), Metric.L1, TOL)
        got = recover_positive_info(oracle, self.window, self.pitch, eps)
        assert got is not None
        assert region_subset(got, region_expand(box, 1 + self.pitch))
        # oracle on the 17 x 17 grid: the sup of d(p, .) over the box sits at a corner
        centres = {r.center for r in got.rects}
        for p in grid_points(self.window, self.pitch):
            hi = max(abs(p.x - cx) + abs(p.y - cy) for cx in (-q, q) for cy in (-q, q))
            if hi < 2 * eps - TOL:
                assert p in centres
            elif hi >= 2 * eps:
                assert p not in centres
            if region_member(box, p):
                assert p in centres

    def test_nothing_close(self):
        far = DistanceOracle(lambda p: DistanceInterval(F(10**6), F(10**6), Metric.L1), Metric.L1)
        assert recover_positive_info(far, self.window, self.pitch, F(1, 2)) is None

    def test_sandwich(self):
        rng = random.Random(34)
        for _ in range(5):
            eps = F(1, 2)
            u = rand_normal_open(rng, n_max=2, side=F(1, 4))
            union = u.positive_union
            b = union.bounds()
            window = Rect(b.x_lo - 1, b.x_hi + 1, b.y_lo - 1, b.y_hi + 1)
            oracle = DistanceOracle.from_open(u, Metric.L1, TOL)
            got = recover_positive_info(oracle, window, self.pitch, eps)
            inner = [Rect.around(p, self.pitch / 2) for p in grid_points(window, self.pitch) if region_member(union, p)]
            if inner:
                assert region_subset(Region(inner), got)
            assert got is None or region_subset(got, region_expand(union, 2 * eps + self.pitch))
