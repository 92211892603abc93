"""Cross-check the solver against the Sturm oracle on random polynomials,
and show what a failed verification looks like."""
from cfroots import IntPoly, IsolatingInterval, isolate_all, verify_isolation
from cfroots.families import random_poly

bad = 0
for seed in range(200):
    A = random_poly(1 + seed % 30, 1000, seed)
    if not verify_isolation(A, isolate_all(A)):
        bad += 1
print(f"200 random polynomials, {bad} failed verification")

# A hand-made wrong answer: one interval holding both roots of X^2 - 2,
# and a "point" that is not a root.
A = IntPoly([-2, 0, 1])
wrong = [IsolatingInterval.open(-2, 2), IsolatingInterval.point(3)]
verdict = verify_isolation(A, wrong)
print("verdict:", verdict.passed)
for msg in verdict.failures:
    print("  ", msg)
