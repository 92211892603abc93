"""Sturm-sequence root counting, used as an independent oracle.

Everything stays in Z[X]: remainders are pseudo-remainders with the sign of
the multiplier corrected, then divided by their positive content.  The
oracle is deliberately simple and slow; it shares only basic arithmetic
with the continued-fraction solver.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .mobius import ExtendedRational
from .poly import (
    IntPoly, Sign, content, derivative, evaluate_sign, exact_divide, pseudo_remainder,
)


def sturm_sequence(A: IntPoly) -> list[IntPoly]:
    """Signed remainder sequence ``A, A', -rem(A, A'), ...``.

    Ends at a nonzero constant when ``A`` is square-free, otherwise at a
    multiple of ``gcd(A, A')``.
    """
    if A.is_zero() or A.degree < 1:
        raise ValueError("Sturm sequence needs degree >= 1")
    seq = [A, derivative(A)]
    while True:
        prev, cur = seq[-2], seq[-1]
        if cur.degree == 0:
            break
        r = pseudo_remainder(prev, cur)
        if r.is_zero():
            break
        delta = prev.degree - cur.degree + 1
        if not (cur.lead < 0 and delta % 2):
            r = -r
        g = content(r)
        seq.append(IntPoly(a // g for a in r) if g > 1 else r)
    return seq


def _sign_at(P: IntPoly, q: ExtendedRational) -> int:
    if q == math.inf:
        return Sign.of(P.lead)
    if q == -math.inf:
        return Sign.of(P.lead) * (-1 if P.degree % 2 else 1)
    return evaluate_sign(P, q)


def variations_at(seq: list[IntPoly], q: ExtendedRational) -> int:
    count = 0
    prev = 0
    for P in seq:
        s = _sign_at(P, q)
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


def _reduced_sequence(A: IntPoly) -> list[IntPoly]:
    # Divide out gcd(A, A') so that multiple roots are counted once
    # and may sit at the interval endpoints.
    seq = sturm_sequence(A)
    g = seq[-1]
    if g.degree > 0:
        c = content(g)
        g = IntPoly(a // c for a in g)
        seq = [exact_divide(P, g) for P in seq]
    return seq


def count_roots_in(A: IntPoly, lo: ExtendedRational, hi: ExtendedRational) -> int:
    """Number of distinct real roots of ``A`` in ``(lo, hi]``."""
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    if lo != -math.inf and evaluate_sign(A, lo) == Sign.ZERO:
        raise ValueError(f"A vanishes at the open endpoint {lo}")
    seq = _reduced_sequence(A)
    return variations_at(seq, lo) - variations_at(seq, hi)


def count_real_roots(A: IntPoly) -> int:
    seq = _reduced_sequence(A)
    return variations_at(seq, -math.inf) - variations_at(seq, math.inf)


def gcd_chain(A: IntPoly) -> list[IntPoly]:
    """``D_0 = A``, ``D_{j+1} = gcd(D_j, D_j')`` while nonconstant.

    A root of ``A`` has multiplicity ``m`` exactly when it is a root of
    ``D_0 .. D_{m-1}`` and not of ``D_m``.
    """
    chain = [A]
    while True:
        g = sturm_sequence(chain[-1])[-1]
        if g.degree < 1:
            return chain
        chain.append(g)


@dataclass
class Verdict:
    passed: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.passed


def verify_isolation(A_in: IntPoly, report) -> Verdict:
    """Check an isolation report for ``A_in`` against Sturm counts.

    The report needs an ``intervals`` attribute (or is itself a sequence)
    of objects with ``kind``, ``lo``, ``hi`` and ``multiplicity``.
    """
    intervals = list(getattr(report, "intervals", report))
    failures = []
    chain = gcd_chain(A_in)

    for iv in intervals:
        lo, hi = Fraction(iv.lo), Fraction(iv.hi)
        if iv.kind == "point":
            if lo != hi or evaluate_sign(A_in, lo) != Sign.ZERO:
                failures.append(f"(a) point {lo} is not a root")
                continue
            mult = sum(1 for D in chain if evaluate_sign(D, lo) == Sign.ZERO)
        else:
            if not lo < hi:
                failures.append(f"(b) open interval ({lo}, {hi}) is empty")
                continue
            if evaluate_sign(A_in, lo) == Sign.ZERO or evaluate_sign(A_in, hi) == Sign.ZERO:
                failures.append(f"(b) interval ({lo}, {hi}) has a root at an endpoint")
                continue
            n = count_roots_in(A_in, lo, hi)
            if n != 1:
                failures.append(f"(b) interval ({lo}, {hi}) holds {n} distinct roots")
                continue
            mult = sum(1 for D in chain if D.degree >= 1 and count_roots_in(D, lo, hi) > 0)
        if mult != iv.multiplicity:
            failures.append(
                f"(e) multiplicity at ({lo}, {hi}) is {mult}, reported {iv.multiplicity}")

    ordered = sorted(intervals, key=lambda iv: (Fraction(iv.lo), Fraction(iv.hi)))
    for a, b in zip(ordered, ordered[1:]):
        a_hi, b_lo = Fraction(a.hi), Fraction(b.lo)
        closed = a.kind == "point" and b.kind == "point"
        if a_hi > b_lo or (a_hi == b_lo and closed):
            failures.append(f"(c) intervals [{a.lo}, {a.hi}] and [{b.lo}, {b.hi}] overlap")

    expected = count_real_roots(A_in)
    if len(intervals) != expected:
        failures.append(f"(d) {len(intervals)} intervals for {expected} distinct real roots")

    return Verdict(not failures, failures)
