"""Dense univariate polynomials over the integers.

Coefficients are stored in ascending order: ``coeffs[i]`` multiplies ``X**i``.
All functions are pure and return new :class:`IntPoly` values.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd as igcd
from typing import Iterable, Sequence


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, x) -> "Sign":
        return cls.POSITIVE if x > 0 else cls.NEGATIVE if x < 0 else cls.ZERO


class IntPoly:
    """Immutable dense polynomial with arbitrary-precision integer coefficients.

    The zero polynomial is stored as ``(0,)``; otherwise the last coefficient
    is nonzero.

    >>> IntPoly([-2, 0, 1])
    IntPoly([-2, 0, 1])
    >>> IntPoly([3, 0, 0]).degree
    0
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0]
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        out = cls([1])
        for r in roots:
            out = multiply(out, cls([-r, 1]))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1]

    @property
    def bitsize(self) -> int:
        """Largest coefficient bit length plus one sign bit."""
        return max(abs(a).bit_length() for a in self.coeffs) + 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return multiply(self, other)

    def __call__(self, x):
        """Exact value at an int or Fraction (Horner)."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc


def _require_nonzero(A: IntPoly, what: str) -> None:
    if A.is_zero():
        raise ValueError(f"{what} is undefined for the zero polynomial")


def evaluate_sign(A: IntPoly, q) -> Sign:
    """Sign of ``A(q)`` for an int or rational ``q``, computed without division.

    Uses the homogenized sum ``sum(a_i * num**i * den**(d-i))``, whose sign
    equals that of ``A(q)`` because ``den > 0``.
    """
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    acc = 0
    dpow = 1
    # Horner on the homogenized form: acc_{i} = acc_{i+1} * num + a_i * den^(d-i)
    for a in reversed(A.coeffs):
        acc = acc * num + a * dpow
        dpow *= den
    return Sign.of(acc)


def sign_variations(A: IntPoly | Sequence[int]) -> int:
    """Number of sign changes in the coefficient list, zeros ignored."""
    coeffs = A.coeffs if isinstance(A, IntPoly) else A
    count = 0
    prev = 0
    for a in coeffs:
        if a:
            if (a > 0) != (prev > 0) and prev:
                count += 1
            prev = a
    if prev == 0:
        raise ValueError("sign variations are undefined for the zero polynomial")
    return count


def taylor_shift(A: IntPoly, c: int) -> IntPoly:
    """Return ``A(X + c)`` using the quadratic Horner scheme."""
    a = list(A.coeffs)
    n = len(a)
    if c == 0 or n == 1:
        return A
    if c == 1:
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                a[j] += a[j + 1]
    else:
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                a[j] += c * a[j + 1]
    return IntPoly(a)


def _strip_pow2(a: list[int]) -> list[int]:
    tz = min(((x & -x).bit_length() - 1 for x in a if x), default=0)
    if tz:
        a = [x >> tz for x in a]
    return a


def homothety_pow2(A: IntPoly, beta: int) -> IntPoly:
    """``A(2**beta * X)`` with the common power-of-two content removed.

    >>> homothety_pow2(IntPoly([-2, 0, 1]), 1)
    IntPoly([-1, 0, 2])
    """
    _require_nonzero(A, "homothety")
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    if beta == 0:
        return A
    return IntPoly(_strip_pow2([a << (i * beta) for i, a in enumerate(A.coeffs)]))


def reverse(A: IntPoly) -> IntPoly:
    """``X**d * A(1/X)``; requires a nonzero constant term."""
    if A.coeffs[0] == 0:
        raise ValueError("reverse needs A(0) != 0; deflate zero roots first")
    return IntPoly(reversed(A.coeffs))


def invert_unit(A: IntPoly) -> IntPoly:
    """``(1 + X)**d * A(1 / (1 + X))``.

    Positive roots of the result correspond to roots of ``A`` in (0, 1).
    If ``A(0) == 0`` the result has lower degree; the lost root sits at
    infinity and never matters for the (0, 1) branch.
    """
    _require_nonzero(A, "invert_unit")
    return taylor_shift(IntPoly(reversed(A.coeffs)), 1)


def negate_variable(A: IntPoly) -> IntPoly:
    return IntPoly(-a if i & 1 else a for i, a in enumerate(A.coeffs))


def deflate_zero_roots(A: IntPoly) -> tuple[IntPoly, int]:
    """Split ``A = X**k * B`` with ``B(0) != 0``; returns ``(B, k)``."""
    _require_nonzero(A, "deflate_zero_roots")
    k = 0
    while A.coeffs[k] == 0:
        k += 1
    return (IntPoly(A.coeffs[k:]) if k else A), k


def derivative(A: IntPoly) -> IntPoly:
    return IntPoly([i * a for i, a in enumerate(A.coeffs)][1:] or [0])


def multiply(A: IntPoly, B: IntPoly) -> IntPoly:
    a, b = A.coeffs, B.coeffs
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return IntPoly(out)


def scale(A: IntPoly, c: int) -> IntPoly:
    return IntPoly(c * a for a in A.coeffs)


def content(A: IntPoly) -> int:
    g = 0
    for a in A.coeffs:
        g = igcd(g, a)
        if g == 1:
            break
    return g


def content_and_primitive(A: IntPoly) -> tuple[int, IntPoly]:
    """Return ``(c, P)`` with ``A = ±c * P``, ``P`` primitive with positive lead."""
    _require_nonzero(A, "content")
    c = content(A)
    s = c if A.lead > 0 else -c
    return c, IntPoly(a // s for a in A.coeffs)


def primitive(A: IntPoly) -> IntPoly:
    return content_and_primitive(A)[1]


def pseudo_remainder(A: IntPoly, B: IntPoly) -> IntPoly:
    """``prem(A, B) = lc(B)**(deg A - deg B + 1) * A mod B``."""
    _require_nonzero(B, "pseudo-division by B")
    r = list(A.coeffs)
    b = B.coeffs
    db = len(b) - 1
    lb = b[-1]
    dr = len(r) - 1
    if dr < db or A.is_zero():
        return A
    for _ in range(dr - db + 1):
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        if lr:
            for j in range(db + 1):
                r[shift + j] -= lr * b[j]
        r.pop()
    return IntPoly(r or [0])


def exact_divide(A: IntPoly, B: IntPoly) -> IntPoly:
    """Quotient ``A / B`` when ``B`` divides ``A`` in Z[X]; raises otherwise."""
    _require_nonzero(B, "division by B")
    r = list(A.coeffs)
    b = B.coeffs
    db = len(b) - 1
    lb = b[-1]
    if A.is_zero():
        return A
    dq = len(r) - 1 - db
    if dq < 0:
        raise ValueError("divisor degree exceeds dividend degree")
    q = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        t, rem = divmod(r[k + db], lb)
        if rem:
            raise ValueError("division is not exact over the integers")
        q[k] = t
        if t:
            for j in range(db + 1):
                r[k + j] -= t * b[j]
    if any(r[:db]):
        raise ValueError("division leaves a nonzero remainder")
    return IntPoly(q)


_PRIME = (1 << 61) - 1


def _coprime_mod_p(A: IntPoly, B: IntPoly, p: int = _PRIME) -> bool:
    """True if ``A`` and ``B`` are certainly coprime over Q.

    A common factor ``G`` over Z keeps its degree mod ``p`` when ``p`` does
    not divide ``lc(A)``, so a constant gcd mod ``p`` rules it out.
    """
    if A.lead % p == 0:
        return False
    a = [x % p for x in A.coeffs]
    b = [x % p for x in B.coeffs]
    while b and b[-1] == 0:
        b.pop()
    while b:
        if len(b) == 1:
            return True
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        while len(a) >= len(b):
            t = a[-1] * inv % p
            off = len(a) - 1 - db
            for j in range(db + 1):
                a[off + j] = (a[off + j] - t * b[j]) % p
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return False


def gcd(A: IntPoly, B: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive PRS).

    >>> gcd(IntPoly([2, 2]), IntPoly([4, 4]))
    IntPoly([1, 1])
    """
    if A.is_zero() and B.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if A.is_zero():
        return primitive(B)
    if B.is_zero():
        return primitive(A)
    if A.degree < B.degree:
        A, B = B, A
    if B.degree > 0 and _coprime_mod_p(A, B):
        return IntPoly([1])
    A, B = primitive(A), primitive(B)
    while not B.is_zero():
        R = pseudo_remainder(A, B)
        A, B = B, (R if R.is_zero() else primitive(R))
    return primitive(A)


def square_free_part(A: IntPoly) -> IntPoly:
    if A.is_zero() or A.degree < 1:
        raise ValueError("square-free part needs degree >= 1")
    g = gcd(A, derivative(A))
    return primitive(exact_divide(primitive(A), g))


def yun_square_free_factorization(A: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm over Z.

    Returns ``[(B_1, 1), (B_2, 2), ...]`` with ``A = c * prod(B_i**i)``;
    each ``B_i`` is primitive, square-free, positive-leading and of degree at
    least one (trivial factors are omitted).

    >>> yun_square_free_factorization(IntPoly([0, 0, 1, 0, 1]))
    [(IntPoly([1, 0, 1]), 1), (IntPoly([0, 1]), 2)]
    """
    if A.is_zero() or A.degree < 1:
        raise ValueError("square-free factorization needs degree >= 1")
    A = primitive(A)
    dA = derivative(A)
    c = gcd(A, dA)
    # Quotients by a primitive divisor stay in Z[X] (Gauss's lemma).
    w = exact_divide(A, c)
    y = exact_divide(dA, c)
    z = y - derivative(w)
    out = []
    i = 1
    while w.degree > 0:
        g = gcd(w, z)
        if g.degree > 0:
            out.append((g, i))
        w = exact_divide(w, g)
        y = exact_divide(z, g)
        z = y - derivative(w)
        i += 1
    return out
