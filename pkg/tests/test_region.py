import random
from fractions import Fraction

import pytest

from helpers import rand_point_in, rand_point_in_closure, rand_region
from pointless.errors import PreconditionError
from pointless.region import (
    Metric,
    Point,
    Rect,
    Region,
    point_distance,
    region_expand,
    region_intersect,
    region_member,
    region_metrics,
    region_subset,
    subset_witness,
)

F = Fraction
UNIT = Rect(0, 1, 0, 1)


def P(x, y):
    return Point.of(x, y)


class TestMembership:
    def test_interior(self):
        assert region_member(Region.of(UNIT), P(F(1, 2), F(1, 2)))

    def test_boundary_excluded(self):
        assert not region_member(Region.of(UNIT), P(0, F(1, 2)))

    def test_second_component(self):
        r = Region.of(UNIT, Rect(2, 3, 0, 1))
        assert region_member(r, P(F(5, 2), F(1, 2)))


def test_degenerate_rect_rejected():
    with pytest.raises(PreconditionError):
        Rect(0, 0, 0, 1)
    with pytest.raises(PreconditionError):
        Region([])


class TestSubset:
    def test_nested(self):
        assert region_subset(Region.of(UNIT), Region.of(Rect(0, 2, 0, 2)))

    def test_reverse(self):
        assert not region_subset(Region.of(Rect(0, 2, 0, 2)), Region.of(UNIT))

    def test_overlapping_cover(self):
        a = Region.of(Rect(0, 2, 0, 1))
        b = Region.of(Rect(0, 1, 0, 1), Rect(F(1, 2), 2, 0, 1))
        assert region_subset(a, b)

    def test_shared_edge_is_not_a_cover(self):
        # the segment x = 1 belongs to a but to neither open half of b
        a = Region.of(Rect(0, 2, 0, 1))
        b = Region.of(Rect(0, 1, 0, 1), Rect(1, 2, 0, 1))
        w = subset_witness(a, b)
        assert w is not None and w.x == 1
        assert region_member(a, w) and not region_member(b, w)

    def test_corner_gap(self):
        # four quadrant boxes of (0,2)^2 plus the two axis strips still miss nothing
        a = Region.of(Rect(0, 2, 0, 2))
        quads = [Rect(0, 1, 0, 1), Rect(1, 2, 0, 1), Rect(0, 1, 1, 2), Rect(1, 2, 1, 2)]
        strips = [Rect(F(1, 2), F(3, 2), 0, 2), Rect(0, 2, F(1, 2), F(3, 2))]
        assert region_subset(a, Region(quads + strips))
        assert not region_subset(a, Region(quads + strips[:1]))

    def test_sampling_falsifier(self):
        rng = random.Random(11)
        seen_true = 0
        for _ in range(150):
            a = rand_region(rng, 2)
            b = rand_region(rng, 4, max_side=3)
            w = subset_witness(a, b)
            if w is not None:
                assert region_member(a, w) and not region_member(b, w)
            else:
                seen_true += 1
                for _ in range(10_000 if seen_true <= 3 else 500):
                    assert region_member(b, rand_point_in(rng, rng.choice(a.rects)))
        assert seen_true >= 3


class TestIntersect:
    def test_overlap(self):
        assert region_intersect(Region.of(Rect(0, 2, 0, 2)), Region.of(Rect(1, 3, 1, 3))) == Region.of(Rect(1, 2, 1, 2))

    def test_disjoint(self):
        assert region_intersect(Region.of(UNIT), Region.of(Rect(2, 3, 2, 3))) is None

    def test_shared_edge_is_empty(self):
        assert region_intersect(Region.of(UNIT), Region.of(Rect(1, 2, 1, 2))) is None

    def test_grid_exhaustive(self):
        rng = random.Random(5)
        grid = [F(k, 8) for k in range(-32, 33)]
        for _ in range(6):
            a, b = rand_region(rng), rand_region(rng)
            ab = region_intersect(a, b)
            for x in grid:
                for y in grid:
                    p = Point(x, y)
                    both = region_member(a, p) and region_member(b, p)
                    assert both == (ab is not None and region_member(ab, p))


class TestMetrics:
    def test_l1_distance(self):
        assert region_metrics(Region.of(Rect(1, 2, 0, 1)), P(0, 0), Metric.L1).distance == 1

    def test_l1_diameter(self):
        assert region_metrics(Region.of(Rect(1, 2, 0, 1)), None, Metric.L1).diameter == 2

    def test_l2sq_distance(self):
        assert region_metrics(Region.of(Rect(3, 4, 3, 4)), P(0, 0), Metric.L2SQ).distance == 18

    def test_l2_has_no_exact_value(self):
        with pytest.raises(PreconditionError):
            region_metrics(Region.of(UNIT), P(0, 0), Metric.L2)

    @pytest.mark.parametrize("metric", [Metric.L1, Metric.LINF])
    def test_distance_against_grid(self, metric):
        rng = random.Random(metric.value)
        pitch = F(1, 16)
        for _ in range(100):
            region = rand_region(rng, 2, den=2)
            p = Point(F(rng.randint(-48, 48), 8), F(rng.randint(-48, 48), 8))
            d = region_metrics(region, p, metric).distance
            best = None
            for r in region.rects:
                nx, ny = int(r.width / pitch), int(r.height / pitch)
                for i in range(nx + 1):
                    for j in range(ny + 1):
                        q = Point(r.x_lo + i * pitch, r.y_lo + j * pitch)
                        v = point_distance(p, q, metric)
                        best = v if best is None else min(best, v)
            assert d <= best <= d + pitch

    def test_diameter_bounds_sampled_pairs(self):
        rng = random.Random(3)
        for _ in range(30):
            region = rand_region(rng)
            diam = region_metrics(region, None, Metric.L1).diameter
            for _ in range(50):
                a = rand_point_in_closure(rng, rng.choice(region.rects))
                b = rand_point_in_closure(rng, rng.choice(region.rects))
                assert point_distance(a, b, Metric.L1) <= diam


class TestExpand:
    def test_single(self):
        assert region_expand(Region.of(UNIT), F(1, 2)) == Region.of(Rect(F(-1, 2), F(3, 2), F(-1, 2), F(3, 2)))

    def test_additive(self):
        r = Region.of(UNIT)
        twice = region_expand(region_expand(r, F(1, 4)), F(1, 4))
        assert twice.same_points(region_expand(r, F(1, 2)))

    def test_componentwise(self):
        e = region_expand(Region.of(UNIT, Rect(2, 3, 0, 1)), F(1, 4))
        assert e.rects == (
            Rect(F(-1, 4), F(5, 4), F(-1, 4), F(5, 4)),
            Rect(F(7, 4), F(13, 4), F(-1, 4), F(5, 4)),
        )

    def test_contains_original(self):
        rng = random.Random(9)
        for _ in range(100):
            r = rand_region(rng)
            eps = F(rng.randint(1, 16), 16)
            assert region_subset(r, region_expand(r, eps))

    def test_nonpositive_eps_rejected(self):
        with pytest.raises(PreconditionError):
            region_expand(Region.of(UNIT), 0)
