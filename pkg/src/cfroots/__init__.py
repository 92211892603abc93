"""Exact real root isolation for integer polynomials by continued fractions."""
from .bounds import positive_lower_bound, positive_root_upper_bound
from .families import FamilySpec
from .mobius import MobiusMap
from .poly import IntPoly, Sign
from .solver import (
    IsolatingInterval, IsolationReport, NodeCeilingExceeded, SolverConfig, SolverStats,
    isolate_all, isolate_positive, isolate_real,
)
from .sturm import count_real_roots, count_roots_in, verify_isolation

__all__ = [
    "IntPoly", "Sign", "MobiusMap", "FamilySpec", "SolverConfig", "SolverStats",
    "IsolatingInterval", "IsolationReport", "NodeCeilingExceeded",
    "isolate_all", "isolate_positive", "isolate_real",
    "positive_lower_bound", "positive_root_upper_bound",
    "count_real_roots", "count_roots_in", "verify_isolation",
]
