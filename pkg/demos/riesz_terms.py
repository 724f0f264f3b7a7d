"""
Terms, enclosures and the bump
==============================
"""

from fractions import Fraction as F

from pointless import ONE, X, Y, Point, Rect, Region, bump_term, enclosure, equal_on_region, eval_term, sup_enclosure

taxicab = abs(X) + abs(Y)
print("|3| + |-4| =", eval_term(taxicab, Point.of(3, -4)))

# enclosures are rigorous intervals over a closed box
box = Rect(-1, 2, -3, 1)
print("range of |x| + |y| on", box, "is inside", enclosure(taxicab, box, F(1, 100)))
print("sup of x & -x:", sup_enclosure(X & -X, Region.of(Rect(-1, 1, 0, 1)), F(1, 100)).sup_enclosure)

# min + max = sum, proven to a micro tolerance without sampling
print(equal_on_region((X & Y) + (X | Y), X + Y, Region.of(Rect(0, 1, 0, 1)), F(1, 10**6)))

# a bump is positive exactly on its box
b = bump_term(Rect(0, 1, 0, 1))
for p in [(F(1, 2), F(1, 2)), (0, F(1, 2)), (-1, F(1, 2))]:
    print(p, eval_term(b, Point.of(*p)))

# squaring stays in the algebra
print(eval_term((X - ONE).squared() + Y.squared(), Point.of(4, 4)))
