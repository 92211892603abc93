"""The substitutions behind the solver, and the Moebius map that tracks them."""
from fractions import Fraction

from cfroots import IntPoly, MobiusMap, positive_lower_bound, positive_root_upper_bound
from cfroots.poly import homothety_pow2, invert_unit, sign_variations, taylor_shift

A = IntPoly([2, -3, 1])          # (X-1)(X-2)
print("A          ", A.coeffs, "variations", sign_variations(A))
print("A(X+1)     ", taylor_shift(A, 1).coeffs)
print("(1+X)^d A(1/(1+X))", invert_unit(A).coeffs)
print("A(2X)/2^k  ", homothety_pow2(A, 1).coeffs)

# positive roots of X^2 - 10X + 16 are 2 and 8; bounds are powers of two
B = IntPoly([16, -10, 1])
print("roots of B lie in 2^%d .. 2^%d" % (positive_lower_bound(B), positive_root_upper_bound(B)))

# follow X -> 1 + X, then X -> 1/(1+X), then X -> 2X
M = MobiusMap.identity().compose_shift(1).compose_invert_unit().compose_homothety_pow2(1)
print(M, "sends 0 ->", M.image(Fraction(0)), "and 1 ->", M.image(Fraction(1)))
print("interval for the node:", M.to_interval(Fraction(4)))
