"""Mignotte polynomials have two roots about 2/101^(d/2+1) apart.
The continued-fraction walk still separates them with few nodes."""
import time

from cfroots import isolate_all, verify_isolation
from cfroots.families import mignotte1, mignotte2

for gen in (mignotte1, mignotte2):
    for d in (10, 20, 40, 80):
        A = gen(d)
        t0 = time.perf_counter()
        rep = isolate_all(A)
        dt = time.perf_counter() - t0
        ok = verify_isolation(A, rep).passed
        print(f"{gen.__name__}({d}): {len(rep.intervals)} roots, "
              f"{rep.stats.node_count} nodes, {dt * 1000:.1f} ms, verified={ok}")

# the two close roots of mignotte1(20), both near 1/101
close = [iv for iv in isolate_all(mignotte1(20)).intervals if 0 <= iv.lo and iv.hi <= 1]
for iv in close:
    print("  ", iv.lo, "<", "root", "<", iv.hi)
