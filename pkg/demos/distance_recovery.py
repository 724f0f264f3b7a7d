"""
Distance to a set with no points
================================

The generic set has no points to measure to, but a normal-form open still
pins the distance from any z into an interval. Those intervals are all we
need to redraw the boxes.
"""

from fractions import Fraction as F

from pointless import BasicOpen, Metric, Point, Rect, Region
from pointless.distance import DistanceOracle, forced_distance_interval, recover_positive_info

strip = BasicOpen.normal([Region.of(Rect(1, 2, 0, 1))])
origin = Point.of(0, 0)

# taxicab: the nearest point in the box is 1 away, the farthest 3
print(forced_distance_interval(strip, origin, Metric.L1, F(1, 10**6)))

# Euclidean endpoints come back as square-root enclosures
print(forced_distance_interval(strip, origin, Metric.L2, F(1, 10**6)))

# small box around the origin, seen only through its distance oracle
q = F(1, 8)
u = BasicOpen.normal([Region.of(Rect(-q, q, -q, q))])
oracle = DistanceOracle.from_open(u, Metric.L1, F(1, 1000))
cells = recover_positive_info(oracle, Rect(-1, 1, -1, 1), F(1, 8), F(1, 2))

# print the recovered cells as a character grid, top row first
centres = {c.center for c in cells.rects}
for j in range(8, -9, -1):
    print("".join("#" if Point(F(i, 8), F(j, 8)) in centres else "." for i in range(-8, 9)))
