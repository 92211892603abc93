"""Root counts, node counts and timings for the standard benchmark families.
Pass degrees on the command line, e.g. ``python demos/benchmark_table.py 50 100``."""
import sys
import time

from cfroots import FamilySpec, isolate_all

degrees = [int(a) for a in sys.argv[1:]] or [20, 50, 100]
families = ["laguerre", "chebyshev1", "chebyshev2", "wilkinson", "mignotte1", "mignotte2", "random"]

print(f"{'family':<12}{'d':>5}{'roots':>7}{'nodes':>8}{'max bits':>10}{'seconds':>10}")
for fam in families:
    for d in degrees:
        A = FamilySpec(fam, d).build()
        t0 = time.perf_counter()
        rep = isolate_all(A)
        dt = time.perf_counter() - t0
        s = rep.stats
        print(f"{fam:<12}{d:>5}{len(rep.intervals):>7}{s.node_count:>8}{s.max_coeff_bits:>10}{dt:>10.3f}")
