"""
No square root survives a loop
==============================

Follow a square root of w once around the circle |w| = r, always taking
the root nearest the previous one. It comes back as the other root, and the
gap between the two is certified with exact rational enclosures.
"""

from fractions import Fraction as F

from pointless.obstruction import sqrt_monodromy

for r in (F(1, 4), F(1), F(2)):
    cert = sqrt_monodromy(r, steps=64)
    sep = cert.separation
    print(f"r = {r}: start {float(cert.start_root[0].mid):+.4f}, "
          f"end {float(cert.end_root[0].mid):+.4f}, separation in [{float(sep.lo):.6f}, {float(sep.hi):.6f}], "
          f"valid = {cert.valid}")

# a few points of the tracked branch
cert = sqrt_monodromy(F(1), steps=8)
for step in cert.trace:
    x, y = step.root
    print(step.k, f"({float(x.mid):+.3f}, {float(y.mid):+.3f})", "flipped" if step.flipped else "")
