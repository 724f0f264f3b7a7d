"""
What a basic open knows about a term
====================================

A basic open of the hyperspace says "meet each of these boxes, stay inside
this region". Nothing more is known about the generic finite set, yet
that is already enough to bound the supremum of any term.
"""

from fractions import Fraction as F

from pointless import BasicOpen, FinitePointSet, Point, Rect, Region, X, Y
from pointless.forcing import forced_sup_interval, forces_equal, normability_refine

# two unit boxes side by side
u = BasicOpen.normal([Region.of(Rect(0, 1, 0, 1)), Region.of(Rect(2, 3, 0, 1))])

# every member meets the right box, so its largest x is at least 2
iv = forced_sup_interval(u, X, F(1, 1000))
print("sup x is forced into", [float(iv.lo), float(iv.hi)])

# equality is decided on the negative region alone
print(forces_equal(u, (X & Y) + (X | Y), X + Y, F(1, 1000)))
print(forces_equal(u, X, Y))

# shrink boxes around a concrete member until x + y barely varies on each
a = FinitePointSet([Point.of(F(1, 2), F(1, 2)), Point.of(F(5, 2), F(1, 4))])
fine = normability_refine(a, X + Y, F(1, 50))
for o in fine.positive:
    print("box", o.rects[0])
print("forced width now", float(forced_sup_interval(fine, X + Y, F(1, 10**4)).width))
