"""Repeated roots: the solver works on the square-free part and reads the
multiplicities back from the square-free factorization."""
from cfroots import IntPoly, isolate_all
from cfroots.poly import multiply, yun_square_free_factorization

A = multiply(IntPoly.from_roots([1, 1, 1, -2, -2]), IntPoly([1, 0, 1]))
print("A =", A.coeffs)
for B, i in yun_square_free_factorization(A):
    print(f"  factor {B.coeffs} to the power {i}")

rep = isolate_all(A)
print("square-free part used:", rep.square_free_used.coeffs)
for iv in rep.intervals:
    print(" ", iv)

# irrational roots of multiplicity three
S = IntPoly([-2, 0, 1])
T = multiply(multiply(S, S), S)
print([str(iv) for iv in isolate_all(T).intervals])
