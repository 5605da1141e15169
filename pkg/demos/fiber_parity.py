"""Fiber sizes of a planar map, and when their parity is forced.

x^3 - 3x has a local max and min, so the fiber of (x^3 - 3x, y) changes
size as the target crosses the critical values +-2.  Away from them the
count is 1 or 3, both odd.  Exactly at a critical value two preimages
merge and the distinct-point count drops to 2: parity holds with
multiplicity, not for distinct points.
"""

from fractions import Fraction

from polyfiber import PolyMap, certify_cor14, parse_poly, solve_fiber
from polyfiber.report import fiber_text

f = PolyMap([parse_poly("x^3 - 3*x", 2), parse_poly("y", 2)])
cert = certify_cor14(f)
print("leading-form certificate:", cert.verdict.value, "| parity:", cert.evidence.parity.value,
      "| Bezout:", cert.evidence.bezout)

for a in (Fraction(-3), Fraction(-2), Fraction(0), Fraction(1, 2), Fraction(2), Fraction(5)):
    rep = solve_fiber(f, (a, 0), width=Fraction(1, 1000))
    print(fiber_text(rep))

# a fiber along a whole curve
g = PolyMap([parse_poly("x*y", 2), parse_poly("y", 2)])
print(fiber_text(solve_fiber(g, (0, 0))))
