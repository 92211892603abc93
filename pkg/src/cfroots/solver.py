"""Continued-fraction real root isolation.

The positive roots are isolated by a depth-first walk over the tree of
substitutions ``X -> b + X`` (``b`` a lower bound on the positive roots),
``X -> 1 + X`` and ``X -> 1 / (1 + X)``, stopping at nodes whose polynomial
has at most one sign variation.  Large lower bounds are absorbed by
power-of-two homotheties first.  Negative roots go through ``X -> -X``;
non-square-free input is reduced to its square-free part and the
multiplicities are recovered from Yun's factorization.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import positive_lower_bound, positive_root_upper_bound, pow2
from .mobius import MobiusMap
from .poly import (
    IntPoly, Sign, deflate_zero_roots, evaluate_sign, homothety_pow2, invert_unit,
    negate_variable, sign_variations, square_free_part, taylor_shift,
    yun_square_free_factorization,
)

log = logging.getLogger(__name__)


class NodeCeilingExceeded(RuntimeError):
    """The search tree grew past the configured node ceiling."""


class MultiplicityError(RuntimeError):
    """An interval matched zero or several square-free factors."""


@dataclass(frozen=True)
class IsolatingInterval:
    kind: str  # "point" or "open"
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @classmethod
    def point(cls, x, multiplicity=1) -> "IsolatingInterval":
        x = Fraction(x)
        return cls("point", x, x, multiplicity)

    @classmethod
    def open(cls, lo, hi, multiplicity=1) -> "IsolatingInterval":
        return cls("open", Fraction(lo), Fraction(hi), multiplicity)

    def mirrored(self) -> "IsolatingInterval":
        return IsolatingInterval(self.kind, -self.hi, -self.lo, self.multiplicity)

    def __str__(self):
        if self.kind == "point":
            s = f"[{_fmt(self.lo)}, {_fmt(self.hi)}]"
        else:
            s = f"({_fmt(self.lo)}, {_fmt(self.hi)})"
        return f"{s} mult {self.multiplicity}"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class SolverConfig:
    homothety_threshold: int = 16
    budan_pruning: bool = True
    collect_stats: bool = True
    # None: 1024 * (d**2 + d*tau + 16)
    node_ceiling: Optional[int] = None

    def __post_init__(self):
        t = self.homothety_threshold
        if t < 2 or t & (t - 1):
            raise ValueError("homothety_threshold must be a power of two >= 2")

    @property
    def homothety_exponent(self) -> int:
        return self.homothety_threshold.bit_length() - 1


@dataclass
class SolverStats:
    node_count: int = 0
    max_coeff_bits: int = 0
    partial_quotient_bits: list[int] = field(default_factory=list)
    shift_count: int = 0
    homothety_count: int = 0

    def merge(self, other: "SolverStats") -> "SolverStats":
        return SolverStats(
            self.node_count + other.node_count,
            max(self.max_coeff_bits, other.max_coeff_bits),
            self.partial_quotient_bits + other.partial_quotient_bits,
            self.shift_count + other.shift_count,
            self.homothety_count + other.homothety_count,
        )

    @property
    def mean_partial_quotient_bits(self) -> float:
        pq = self.partial_quotient_bits
        return sum(pq) / len(pq) if pq else 0.0


@dataclass
class IsolationReport:
    intervals: list[IsolatingInterval]
    stats: SolverStats
    square_free_used: IntPoly


def default_node_ceiling(A: IntPoly) -> int:
    d, tau = A.degree, A.bitsize
    return 1024 * (d * d + d * tau + 16)


def isolate_positive(
    A: IntPoly,
    M: Optional[MobiusMap] = None,
    cfg: SolverConfig = SolverConfig(),
) -> tuple[list[IsolatingInterval], SolverStats]:
    """Isolate the roots lying in ``M((0, inf))`` of the polynomial that ``A`` came from.

    ``A`` must be square-free.  Each stack entry carries the node polynomial,
    its map, and the position/scale of the partial quotient being built, so
    that the bit size of every completed partial quotient can be recorded.

    Examples
    ========

    >>> [str(iv) for iv in isolate_positive(IntPoly([-2, 0, 1]))[0]]
    ['(0, 4) mult 1']
    """
    if A.is_zero() or A.degree < 1:
        raise ValueError("isolate_positive needs degree >= 1")
    M = MobiusMap.identity() if M is None else M
    ceiling = cfg.node_ceiling or default_node_ceiling(A)
    hexp = cfg.homothety_exponent
    stats = SolverStats()
    out: list[IsolatingInterval] = []

    # (poly, map, partial-quotient offset, partial-quotient scale,
    #  local 0 maps to a reported root, local inf maps to a reported root)
    stack = [(A, M, 0, 1, False, False)]
    while stack:
        A, M, pq, pq_scale, lo_root, hi_root = stack.pop()
        stats.node_count += 1
        if stats.node_count > ceiling:
            raise NodeCeilingExceeded(
                f"node ceiling {ceiling} exceeded (degree {A.degree}); "
                "is the input square-free?")
        if cfg.collect_stats:
            stats.max_coeff_bits = max(stats.max_coeff_bits, A.bitsize - 1)

        if A.coeffs[0] == 0:
            out.append(IsolatingInterval.point(M.image(0)))
            A, _ = deflate_zero_roots(A)
            lo_root = True
            if A.degree < 1:
                continue

        V = sign_variations(A)
        if V == 0:
            continue
        if V == 1:
            if sum(A.coeffs) == 0:
                # The single positive root is exactly 1.
                out.append(IsolatingInterval.point(M.image(1)))
            else:
                out.append(_leaf_interval(A, M, lo_root, hi_root))
            continue

        e = positive_lower_bound(A)
        while e is not None and e >= hexp:
            A = homothety_pow2(A, e)
            M = M.compose_homothety_pow2(e)
            pq_scale <<= e
            stats.homothety_count += 1
            e = positive_lower_bound(A)
        if e is None:
            # Cannot happen with V >= 2 after deflation, but stay safe.
            continue
        if e > 0:
            b = 1 << e
            A = taylor_shift(A, b)
            M = M.compose_shift(b)
            pq += b * pq_scale
            lo_root = False
            stats.shift_count += 1

        A1 = taylor_shift(A, 1)
        stats.shift_count += 1
        if not cfg.budan_pruning or sign_variations(A1) < V:
            A2 = invert_unit(A)
            one_is_root = A2.coeffs[0] == 0
            if one_is_root:
                # A(1) = 0: that root belongs to the (1, inf) child.
                A2, _ = deflate_zero_roots(A2)
            if A2.degree >= 1:
                if cfg.collect_stats:
                    stats.partial_quotient_bits.append(max(1, pq.bit_length()))
                stack.append((A2, M.compose_invert_unit(), 0, 1, one_is_root, lo_root))
        stack.append((A1, M.compose_shift(1), pq + pq_scale, pq_scale, False, hi_root))

    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out, stats


def _leaf_interval(A: IntPoly, M: MobiusMap, lo_root: bool, hi_root: bool) -> IsolatingInterval:
    """Interval for a node with one sign variation.

    Local 0 and infinity become ``M(0)`` and ``M(inf)``, unless that image is
    unbounded or is a root reported elsewhere; then the node's strict
    positive-root bounds stand in.
    """
    if not lo_root and not hi_root:
        return IsolatingInterval.open(*M.to_interval(pow2(positive_root_upper_bound(A))))
    lo = pow2(positive_lower_bound(A)) if lo_root else Fraction(0)
    hi = pow2(positive_root_upper_bound(A)) if hi_root or M.m == 0 else math.inf
    a, b = M.image(lo), M.image(hi)
    return IsolatingInterval.open(min(a, b), max(a, b))


def isolate_real(
    A: IntPoly, cfg: SolverConfig = SolverConfig()
) -> tuple[list[IsolatingInterval], SolverStats]:
    """Isolate all real roots of a square-free ``A``, sorted ascending."""
    if A.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    if A.degree < 1:
        return [], SolverStats()
    out: list[IsolatingInterval] = []
    B, k = deflate_zero_roots(A)
    if k:
        out.append(IsolatingInterval.point(0))
    stats = SolverStats()
    if B.degree >= 1:
        Bneg = negate_variable(B)
        pos, s1 = isolate_positive(B, None, cfg)
        neg, s2 = isolate_positive(Bneg, None, cfg)
        if k:
            pos = _lift_off_zero(pos, B)
            neg = _lift_off_zero(neg, Bneg)
        out += pos
        out += [iv.mirrored() for iv in neg]
        stats = s1.merge(s2)
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out, stats


def _lift_off_zero(ivs: list[IsolatingInterval], B: IntPoly) -> list[IsolatingInterval]:
    # 0 is a root of the caller's polynomial, so no open interval may end there.
    out = []
    for iv in ivs:
        if iv.kind == "open" and iv.lo == 0:
            iv = IsolatingInterval.open(pow2(positive_lower_bound(B)), iv.hi)
        out.append(iv)
    return out


def _has_root_in(B: IntPoly, iv: IsolatingInterval) -> bool:
    if iv.kind == "point":
        return evaluate_sign(B, iv.lo) == Sign.ZERO
    # B is square-free with at most one root in the isolating interval,
    # and is nonzero at both endpoints.
    return evaluate_sign(B, iv.lo) * evaluate_sign(B, iv.hi) < 0


def attach_multiplicities(
    intervals: Sequence[IsolatingInterval],
    factors: Sequence[tuple[IntPoly, int]],
) -> list[IsolatingInterval]:
    out = []
    for iv in intervals:
        hits = [i for B, i in factors if _has_root_in(B, iv)]
        if len(hits) != 1:
            raise MultiplicityError(f"{len(hits)} factors have a root in {iv}")
        out.append(IsolatingInterval(iv.kind, iv.lo, iv.hi, hits[0]))
    return out


def isolate_all(A_in: IntPoly, cfg: SolverConfig = SolverConfig()) -> IsolationReport:
    """Isolate the real roots of any nonconstant ``A_in`` with multiplicities.

    >>> rep = isolate_all(IntPoly.from_roots([1, 1, 1, -2, -2]))
    >>> [str(iv) for iv in rep.intervals]
    ['(-4, 0) mult 2', '[1, 1] mult 3']
    """
    if A_in.is_zero() or A_in.degree < 1:
        raise ValueError("isolate_all needs a polynomial of degree >= 1")
    sqf = square_free_part(A_in)
    intervals, stats = isolate_real(sqf, cfg)
    if sqf.degree == A_in.degree:
        factors = [(sqf, 1)]
    else:
        factors = yun_square_free_factorization(A_in)
    intervals = attach_multiplicities(intervals, factors)
    log.debug("isolated %d roots with %d nodes", len(intervals), stats.node_count)
    return IsolationReport(intervals, stats, sqf)
