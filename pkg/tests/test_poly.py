from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cfroots.poly import (
    IntPoly, Sign, content_and_primitive, deflate_zero_roots, derivative, evaluate_sign,
    exact_divide, gcd, homothety_pow2, invert_unit, multiply, negate_variable, reverse,
    sign_variations, square_free_part, taylor_shift, yun_square_free_factorization,
)
from cfroots.sturm import count_roots_in
from conftest import int_polys

x = sympy.Symbol("x")


def to_sympy(A):
    return sum(c * x**i for i, c in enumerate(A.coeffs))


def from_sympy(expr):
    return IntPoly(reversed(sympy.Poly(sympy.expand(expr), x).all_coeffs()))


def P(*c):
    return IntPoly(c)


class TestIntPoly:
    def test_normalizes_trailing_zeros(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert IntPoly([]).coeffs == (0,)
        assert P(0, 0).is_zero()

    def test_immutable(self):
        with pytest.raises(AttributeError):
            P(1).coeffs = (2,)

    def test_degree_and_bitsize(self):
        A = P(-2, 0, 1)
        assert A.degree == 2
        assert A.bitsize == 3

    def test_call_is_exact(self):
        assert P(-2, 0, 1)(Fraction(3, 2)) == Fraction(1, 4)


@pytest.mark.parametrize("coeffs, q, expected", [
    ((-2, 0, 1), 1, Sign.NEGATIVE),
    ((-2, 0, 1), 2, Sign.POSITIVE),
    ((2, -3, 1), 1, Sign.ZERO),
])
def test_evaluate_sign(coeffs, q, expected):
    assert evaluate_sign(IntPoly(coeffs), q) == expected


@given(int_polys(), st.fractions())
def test_evaluate_sign_matches_direct_value(A, q):
    assert evaluate_sign(A, q) == Sign.of(A(q))


@pytest.mark.parametrize("coeffs, expected", [((-2, 0, 1), 1), ((2, -3, 1), 2), ((1, 1, 1), 0)])
def test_sign_variations(coeffs, expected):
    assert sign_variations(IntPoly(coeffs)) == expected


def test_sign_variations_zero_poly():
    with pytest.raises(ValueError):
        sign_variations(P(0))


@pytest.mark.parametrize("coeffs, c, expected", [
    ((0, 0, 1), 1, (1, 2, 1)),
    ((-2, 0, 1), 1, (-1, 2, 1)),
    ((5,), 7, (5,)),
])
def test_taylor_shift(coeffs, c, expected):
    assert taylor_shift(IntPoly(coeffs), c).coeffs == expected


@given(int_polys(), st.integers(-20, 20))
def test_taylor_shift_matches_sympy(A, c):
    assert taylor_shift(A, c) == from_sympy(to_sympy(A).subs(x, x + c))


def test_homothety_examples():
    # oracle: sympy expansion of A(2**beta x), then strip the common power of two
    assert homothety_pow2(P(-2, 0, 1), 1) == P(-1, 0, 2)
    assert from_sympy(to_sympy(P(-2, 0, 1)).subs(x, 2 * x) / 2) == P(-1, 0, 2)
    assert homothety_pow2(P(3, -1, 7), 0) == P(3, -1, 7)
    assert homothety_pow2(P(0, 1), 3) == P(0, 1)


@given(int_polys(min_degree=1), st.integers(0, 6))
def test_homothety_scales_roots(A, beta):
    B = homothety_pow2(A, beta)
    assert B.degree == A.degree
    # B is A(2**beta X) up to a positive constant
    ratio = Fraction(B.lead, A.lead << (A.degree * beta))
    assert ratio > 0
    assert all(Fraction(b) == ratio * (a << (i * beta)) for i, (a, b) in enumerate(zip(A, B)))


def test_reverse():
    assert reverse(P(-2, 0, 1)) == P(1, 0, -2)
    assert reverse(P(1, 2, 1)) == P(1, 2, 1)
    with pytest.raises(ValueError):
        reverse(P(0, 1))


@pytest.mark.parametrize("coeffs", [(-1, 1), (-1, 0, 1), (1,), (3, -5, 0, 2)])
def test_invert_unit_matches_symbolic(coeffs):
    A = IntPoly(coeffs)
    d = A.degree
    expected = from_sympy(sympy.cancel((1 + x) ** d * to_sympy(A).subs(x, 1 / (1 + x))))
    assert invert_unit(A) == expected


def test_invert_unit_examples():
    assert invert_unit(P(-1, 1)) == P(0, -1)
    assert invert_unit(P(-1, 0, 1)) == P(0, -2, -1)
    assert invert_unit(P(1)) == P(1)


def test_negate_variable():
    assert negate_variable(P(2, -3, 1)) == P(2, 3, 1)
    assert negate_variable(P(0, 1)) == P(0, -1)
    assert negate_variable(P(1, 0, 1)) == P(1, 0, 1)


def test_deflate_zero_roots():
    assert deflate_zero_roots(P(0, 0, 3, 1)) == (P(3, 1), 2)
    assert deflate_zero_roots(P(1, 1)) == (P(1, 1), 0)
    assert deflate_zero_roots(P(0, 5)) == (P(5), 1)
    with pytest.raises(ValueError):
        deflate_zero_roots(P(0))


def test_derivative():
    assert derivative(P(-2, 0, 1)) == P(0, 2)
    assert derivative(P(5)) == P(0)
    assert derivative(P(1, 1, 1, 1)) == P(1, 2, 3)


def test_multiply():
    A = P(4, 0, -1)
    assert multiply(P(-1, 1), P(-2, 1)) == P(2, -3, 1)
    assert multiply(A, P(1)) == A
    assert multiply(P(0), A) == P(0)


def test_content_and_primitive():
    assert content_and_primitive(P(2, -4, 6)) == (2, P(1, -2, 3))
    assert content_and_primitive(P(-3)) == (3, P(1))
    assert content_and_primitive(P(1, 0, 1)) == (1, P(1, 0, 1))
    with pytest.raises(ValueError):
        content_and_primitive(P(0))


def test_gcd():
    assert gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
    assert gcd(P(1, 0, 1), P(-1, 0, 1)) == P(1)
    assert gcd(P(2, 2), P(4, 4)) == P(1, 1)


@given(int_polys(6, 9), int_polys(6, 9), int_polys(4, 9, min_degree=1))
@settings(max_examples=60)
def test_gcd_matches_sympy(A, B, G):
    A, B = multiply(A, G), multiply(B, G)
    expected = from_sympy(sympy.gcd(to_sympy(A), to_sympy(B)))
    _, expected = content_and_primitive(expected)
    assert gcd(A, B) == expected


def test_exact_divide():
    assert exact_divide(P(2, -3, 1), P(-1, 1)) == P(-2, 1)
    with pytest.raises(ValueError):
        exact_divide(P(1, 0, 1), P(-1, 1))


def test_square_free_part():
    assert square_free_part(P(1, -2, 1)) == P(-1, 1)
    assert square_free_part(P(-2, 0, 1)) == P(-2, 0, 1)
    assert square_free_part(P(0, 0, 0, 1)) == P(0, 1)
    with pytest.raises(ValueError):
        square_free_part(P(4))


@given(int_polys(8, 20, min_degree=1), int_polys(3, 5, min_degree=1))
@settings(max_examples=80)
def test_square_free_part_properties(A, B):
    A = multiply(A, multiply(B, B))
    S = square_free_part(A)
    exact_divide(A, S)  # raises unless S | A
    assert gcd(S, derivative(S)).degree == 0


def test_yun_examples():
    A = IntPoly.from_roots([1, 1, 1, -2, -2])
    assert yun_square_free_factorization(A) == [(P(2, 1), 2), (P(-1, 1), 3)]
    assert yun_square_free_factorization(P(-2, 0, 1)) == [(P(-2, 0, 1), 1)]
    assert yun_square_free_factorization(P(0, 0, 1, 0, 1)) == [(P(1, 0, 1), 1), (P(0, 1), 2)]


@given(st.lists(int_polys(3, 6, min_degree=1), min_size=1, max_size=4), st.integers(-9, 9).filter(bool))
@settings(max_examples=80)
def test_yun_reassembles(parts, c):
    A = P(c)
    for i, F in enumerate(parts, 1):
        for _ in range(i):
            A = multiply(A, F)
    factors = yun_square_free_factorization(A)
    prod = P(1)
    for B, i in factors:
        assert B.lead > 0 and content_and_primitive(B)[0] == 1
        for _ in range(i):
            prod = multiply(prod, B)
    assert prod.degree == A.degree
    assert content_and_primitive(prod)[1] == content_and_primitive(A)[1]
    for (B1, _), (B2, _) in zip(factors, factors[1:]):
        assert gcd(B1, B2).degree == 0


# transform algebra

@given(int_polys(), st.integers(-10, 10), st.integers(-10, 10))
def test_shift_composition(A, a, b):
    assert taylor_shift(taylor_shift(A, a), b) == taylor_shift(A, a + b)


@given(int_polys())
def test_shift_by_zero_and_degree_preservation(A):
    assert taylor_shift(A, 0) == A
    assert taylor_shift(A, 3).degree == A.degree
    assert negate_variable(A).degree == A.degree


@given(int_polys().filter(lambda A: A.coeffs[0] != 0))
def test_reverse_involution(A):
    assert reverse(reverse(A)) == A


@given(int_polys(min_degree=1).filter(lambda A: A.coeffs[0] != 0),
       st.fractions(min_value=0, max_value=1000).filter(lambda p: p > 0))
def test_invert_unit_commutes_with_substitution(A, p):
    assert evaluate_sign(invert_unit(A), p) == evaluate_sign(A, 1 / (1 + p))


@given(int_polys(min_degree=1), st.integers(-8, 8), st.integers(1, 8))
def test_budan_monotonicity(A, a, gap):
    assert sign_variations(taylor_shift(A, a)) >= sign_variations(taylor_shift(A, a + gap))


@given(int_polys(min_degree=1).filter(lambda A: A.coeffs[0] != 0))
def test_descartes_parity(A):
    positive = count_roots_in(A, 0, float("inf"))
    # Descartes counts with multiplicity; compare on the square-free part
    S = square_free_part(A)
    V = sign_variations(S)
    assert positive <= V and (V - positive) % 2 == 0


def test_modular_coprimality_shortcut():
    from cfroots.poly import _PRIME, _coprime_mod_p
    assert _coprime_mod_p(P(-2, 0, 1), P(0, 2))
    assert not _coprime_mod_p(P(-1, 0, 1), P(-1, 1))
    # p | lc(A): the test must refuse to decide
    assert not _coprime_mod_p(P(1, _PRIME), P(1, 1))
    # coprime over Z but not mod p
    assert not _coprime_mod_p(P(1, 1), P(1 + _PRIME, 1))
    assert gcd(P(1, 1), P(1 + _PRIME, 1)) == P(1)
