"""Isolate the real roots of a few small polynomials.

Coefficients are given lowest degree first, so IntPoly([-2, 0, 1]) is X^2 - 2.
"""
from cfroots import IntPoly, isolate_all

# sqrt(2) and -sqrt(2): two open intervals with rational endpoints
A = IntPoly([-2, 0, 1])
for iv in isolate_all(A).intervals:
    print("X^2 - 2      ", iv)

# rational roots come back as exact points
B = IntPoly.from_roots([1, 2, 3])
for iv in isolate_all(B).intervals:
    print("(X-1)(X-2)(X-3)", iv)

# no real roots at all
print("X^2 + 1      ", isolate_all(IntPoly([1, 0, 1])).intervals)

# the endpoints are Fractions, so any refinement can stay exact
iv = isolate_all(IntPoly([-3, 0, 1])).intervals[1]
print("sqrt(3) lies in", iv.lo, "..", iv.hi, "width", iv.hi - iv.lo)
