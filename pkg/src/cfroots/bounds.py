"""Power-of-two bounds on the positive real roots of an integer polynomial.

Bounds are returned as exponents: ``e`` stands for ``2**e`` and ``None``
means the polynomial has no positive root.  Radicals are never evaluated in
floating point; everything reduces to shifts and integer comparisons.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .poly import IntPoly, reverse

NO_POSITIVE_ROOT = None


def _min_exponent(mag: int, lead: int, k: int) -> int:
    """Smallest integer f with ``2**(f*k) * lead >= mag`` (all positive)."""
    f = (mag.bit_length() - lead.bit_length()) // k - 1

    def ok(f):
        s = f * k
        return (lead << s) >= mag if s >= 0 else lead >= (mag << -s)

    while not ok(f):
        f += 1
    while ok(f - 1):
        f -= 1
    return f


def positive_root_upper_bound(A: IntPoly) -> Optional[int]:
    """Exponent ``e`` of the smallest ``2**e >= 2 * max_j (|a_j|/a_d)**(1/(d-j))``.

    The max runs over the coefficients whose sign opposes the leading one.
    The bound is strict: every positive root is ``< 2**e``.

    >>> positive_root_upper_bound(IntPoly([-3, 1]))
    3
    >>> positive_root_upper_bound(IntPoly([1, 0, 1])) is None
    True
    """
    c = A.coeffs
    d = len(c) - 1
    if d < 1:
        raise ValueError("positive root bound needs degree >= 1")
    lead = c[-1]
    if lead < 0:
        c = [-a for a in c]
        lead = -lead
    best = None
    for j in range(d):
        a = c[j]
        if a < 0:
            f = _min_exponent(-a, lead, d - j)
            if best is None or f > best:
                best = f
    return None if best is None else best + 1


def positive_lower_bound(A: IntPoly) -> Optional[int]:
    """Exponent ``e`` with ``2**e`` strictly below every positive root of ``A``.

    Computed as the inverse of the upper bound for the reversed polynomial.

    >>> positive_lower_bound(IntPoly([-2, 0, 1]))
    -1
    """
    if A.coeffs[0] == 0:
        raise ValueError("lower bound needs A(0) != 0; deflate zero roots first")
    e = positive_root_upper_bound(reverse(A))
    return None if e is None else -e


def pow2(e: int) -> Fraction:
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)
