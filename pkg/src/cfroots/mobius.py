"""Integer Möbius maps ``X -> (k*X + l) / (m*X + n)``.

A CF run composes the map of each node with the elementary substitutions it
applies to the node polynomial, so the entries are consecutive convergent
numerators and denominators (scaled by any homotheties).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

INF = math.inf

# A Fraction, or +/- math.inf
ExtendedRational = Union[Fraction, float]


@dataclass(frozen=True)
class MobiusMap:
    k: int
    l: int
    m: int
    n: int

    def __post_init__(self):
        if self.k * self.n - self.l * self.m == 0:
            raise ValueError(f"degenerate Möbius map {self}")

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    @property
    def determinant(self) -> int:
        return self.k * self.n - self.l * self.m

    def compose_shift(self, c: int) -> "MobiusMap":
        """``M(X + c)``."""
        k, l, m, n = self.k, self.l, self.m, self.n
        return MobiusMap(k, k * c + l, m, m * c + n)

    def compose_homothety_pow2(self, beta: int) -> "MobiusMap":
        """``M(2**beta * X)``."""
        return MobiusMap(self.k << beta, self.l, self.m << beta, self.n)

    def compose_invert_unit(self) -> "MobiusMap":
        """``M(1 / (1 + X))``."""
        k, l, m, n = self.k, self.l, self.m, self.n
        return MobiusMap(l, k + l, n, m + n)

    def image(self, q: ExtendedRational) -> ExtendedRational:
        if q == INF:
            return INF if self.m == 0 else Fraction(self.k, self.m)
        q = Fraction(q)
        p, s = q.numerator, q.denominator
        num = self.k * p + self.l * s
        den = self.m * p + self.n * s
        if den == 0:
            # num != 0 here because the determinant is nonzero
            return INF
        return Fraction(num, den)

    def to_interval(self, fallback_upper: Fraction) -> tuple[Fraction, Fraction]:
        """Sorted endpoints ``M(0)`` and ``M(inf)``.

        When ``M(inf)`` is infinite it is replaced by ``M(fallback_upper)``,
        where ``fallback_upper`` bounds the node polynomial's positive roots.
        """
        a = self.image(Fraction(0))
        b = self.image(INF)
        if b == INF:
            b = self.image(fallback_upper)
        return (a, b) if a <= b else (b, a)
