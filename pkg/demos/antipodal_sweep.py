"""
Every selector breaks somewhere
===============================

Rotate an antipodal pair half a turn. The member set at the end is the same
as at the start, but the labels have swapped. A selector that picks one of
the pair at each step either jumps or fails to come back to where it began.
"""

from fractions import Fraction as F

from pointless import FinitePointSet, Point
from pointless.obstruction import (
    SweepConfig,
    antipodal_sweep,
    antipodal_unsat,
    constant_selector,
    flip_selector,
    larger_real_part_selector,
    random_selector,
    verify_violation,
)

cfg = SweepConfig(FinitePointSet([Point.of(0, 0), Point.of(3, 0)]), 0, F(1, 4), steps=16)

selectors = {
    "always the first": constant_selector(0),
    "switch half way": flip_selector(8),
    "larger real part": larger_real_part_selector,
    "coin flips": random_selector(3),
}
for name, sel in selectors.items():
    v = antipodal_sweep(sel, cfg)
    print(f"{name:>17}: {v.kind} at step {v.step}, re-verified {verify_violation(v)}")

# the same contradiction with the geometry stripped away
for n in (1, 4, 12):
    rec = antipodal_unsat(n)
    print(f"n = {n}: checked {rec.checked}, satisfying {rec.satisfying}")
