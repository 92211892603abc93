import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cfroots.bounds import positive_lower_bound, positive_root_upper_bound, pow2
from cfroots.poly import IntPoly, reverse
from cfroots.sturm import count_roots_in
from conftest import int_polys


def P(*c):
    return IntPoly(c)


def test_upper_bound_examples():
    # 2 * (4/1)**(1/2) = 4; 2 * 3 = 6 -> 8
    assert positive_root_upper_bound(P(-4, 0, 1)) == 2
    assert positive_root_upper_bound(P(1, 0, 1)) is None
    assert positive_root_upper_bound(P(-3, 1)) == 3


def test_upper_bound_negative_lead_is_normalized():
    assert positive_root_upper_bound(P(4, 0, -1)) == 2


def test_upper_bound_degree_zero():
    with pytest.raises(ValueError):
        positive_root_upper_bound(P(3))


def test_lower_bound_examples():
    # reverse(X^2-4) ~ 4X^2-1: 2*(1/4)**(1/2) = 1  -> 1
    # reverse(X^2-2) ~ 2X^2-1: 2*(1/2)**(1/2) = sqrt 2 -> 2 -> 1/2
    assert positive_lower_bound(P(-4, 0, 1)) == 0
    assert positive_lower_bound(P(-2, 0, 1)) == -1
    assert positive_lower_bound(P(1, 1)) is None
    with pytest.raises(ValueError):
        positive_lower_bound(P(0, 1))


def _float_bound(A):
    c = A.coeffs if A.lead > 0 else [-a for a in A.coeffs]
    d = len(c) - 1
    vals = [2 * (abs(c[j]) / c[d]) ** (1 / (d - j)) for j in range(d) if c[j] < 0]
    return max(vals) if vals else None


@given(int_polys(10, 1000, min_degree=1))
def test_upper_bound_is_smallest_power_of_two_above_float_bound(A):
    e = positive_root_upper_bound(A)
    fb = _float_bound(A)
    if fb is None:
        assert e is None
        return
    # allow for float rounding right at a power of two
    assert 2.0**e >= fb * (1 - 1e-12)
    assert 2.0 ** (e - 1) < fb * (1 + 1e-12)


@given(st.lists(st.integers(1, 60), min_size=1, max_size=6), st.lists(st.integers(-60, -1), max_size=4))
def test_upper_bound_sound_on_linear_factors(pos, neg):
    A = IntPoly.from_roots(pos + neg)
    e = positive_root_upper_bound(A)
    assert all(r < pow2(e) for r in pos)


@given(int_polys(10, 100, min_degree=1).filter(lambda A: A.coeffs[0] != 0))
@settings(max_examples=150)
def test_lower_bound_sound_against_sturm(A):
    e = positive_lower_bound(A)
    if e is None:
        assert count_roots_in(A, 0, math.inf) == 0
    else:
        assert count_roots_in(A, 0, pow2(e)) == 0
        assert positive_root_upper_bound(reverse(A)) == -e


@given(st.integers(1, 12), st.lists(st.integers(-10**6, -1), min_size=1, max_size=11),
       st.integers(1, 10**6))
def test_quality_on_single_positive_root_construction(d, negs, lead):
    # C = lead*X^d + sum of negative terms below degree d has exactly one
    # positive root t; the unrounded bound lies in [t, 2t), so 2**e < 4t.
    coeffs = [0] * d + [lead]
    for j, a in enumerate(negs[:d]):
        coeffs[j] = a
    C = IntPoly(coeffs)
    e = positive_root_upper_bound(C)
    assert count_roots_in(C, 0, math.inf) == 1
    t_lo = pow2(e) / 4
    # t > 2**e / 4  <=>  no root in (0, 2**e/4]
    assert count_roots_in(C, 0, t_lo) == 0
    assert count_roots_in(C, 0, pow2(e)) == 1
