"""Benchmark polynomial families with exact integer coefficients.

Random families draw from SplitMix64 so that the coefficient streams are
identical on every platform and Python version.
"""
from __future__ import annotations

from dataclasses import dataclass

from .poly import IntPoly, multiply

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea & Flood 2014), the ``java.util.SplittableRandom`` mixer."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]`` by rejection (no modulo bias)."""
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            x = self.next()
            if x < limit:
                return lo + x % span


def wilkinson(d: int) -> IntPoly:
    _check_degree(d)
    return IntPoly.from_roots(range(1, d + 1))


def laguerre_scaled(d: int) -> IntPoly:
    """``d! * L_d(X)`` from ``P_{n+1} = (2n+1-X) P_n - n**2 P_{n-1}``."""
    _check_degree(d)
    prev, cur = IntPoly([1]), IntPoly([1, -1])
    for n in range(1, d):
        nxt = multiply(IntPoly([2 * n + 1, -1]), cur) - IntPoly([n * n * a for a in prev])
        prev, cur = cur, nxt
    return cur


def _chebyshev(d: int, first: IntPoly) -> IntPoly:
    _check_degree(d)
    prev, cur = IntPoly([1]), first
    for _ in range(1, d):
        prev, cur = cur, IntPoly([0] + [2 * a for a in cur]) - prev
    return cur


def chebyshev_t(d: int) -> IntPoly:
    return _chebyshev(d, IntPoly([0, 1]))


def chebyshev_u(d: int) -> IntPoly:
    return _chebyshev(d, IntPoly([0, 2]))


def mignotte1(d: int) -> IntPoly:
    """``X**d - 2*(101*X - 1)**2``."""
    if d < 3:
        raise ValueError("Mignotte polynomials need degree >= 3")
    c = [0] * (d + 1)
    c[0], c[1], c[2] = -2, 404, -20402
    c[d] += 1
    return IntPoly(c)


def mignotte2(d: int) -> IntPoly:
    """Product of ``mignotte1(d)`` and ``101**2 * X**d - 2*((101**2+1)*X - 101)**2``.

    The second factor is the integer multiple of ``X**d - 2*((101 + 1/101)*X - 1)**2``.
    """
    if d < 3:
        raise ValueError("Mignotte polynomials need degree >= 3")
    s = 101 * 101 + 1
    c = [0] * (d + 1)
    c[0], c[1], c[2] = -2 * 101 * 101, 4 * s * 101, -2 * s * s
    c[d] += 101 * 101
    return multiply(mignotte1(d), IntPoly(c))


def random_poly(d: int, coeff_bound: int = 1000, seed: int = 0) -> IntPoly:
    _check_degree(d)
    rng = SplitMix64(seed)
    c = [rng.uniform(-coeff_bound, coeff_bound) for _ in range(d + 1)]
    while c[d] == 0:
        c[d] = rng.uniform(-coeff_bound, coeff_bound)
    return IntPoly(c)


def monic_random(d: int, coeff_bound: int = 1000, seed: int = 0) -> IntPoly:
    _check_degree(d)
    rng = SplitMix64(seed)
    return IntPoly([rng.uniform(-coeff_bound, coeff_bound) for _ in range(d)] + [1])


def _check_degree(d: int) -> None:
    if d < 1:
        raise ValueError("degree must be >= 1")


FAMILIES = {
    "laguerre": laguerre_scaled,
    "chebyshev1": chebyshev_t,
    "chebyshev2": chebyshev_u,
    "wilkinson": wilkinson,
    "mignotte1": mignotte1,
    "mignotte2": mignotte2,
    "random": random_poly,
    "monic_random": monic_random,
}

RANDOM_FAMILIES = {"random", "monic_random"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    degree: int
    seed: int = 0
    coeff_bound: int = 1000

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        if self.degree < 1:
            raise ValueError("degree must be >= 1")

    def build(self) -> IntPoly:
        gen = FAMILIES[self.family]
        if self.family in RANDOM_FAMILIES:
            return gen(self.degree, self.coeff_bound, self.seed)
        return gen(self.degree)
