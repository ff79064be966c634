import math

import pytest
from hypothesis import given, strategies as st

from necksum.arith import (
    INFINITY,
    IntPolynomial,
    binomial,
    divisors,
    euler_phi,
    exact_div,
    moebius,
    nu2,
    one_minus_neg_x_pow,
    poly_divide_exact,
    poly_mul,
    poly_scale_exact,
    prime_factors,
    ramanujan_sum,
    ramanujan_sum_closed,
)
from necksum.errors import NonExactDivision

from oracles import ramanujan_numeric


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]
    with pytest.raises(ValueError):
        divisors(0)


def test_phi_and_mu_small_values():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert [moebius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert prime_factors(360) == (2, 3, 5)


@given(st.integers(1, 3000))
def test_phi_and_mu_divisor_sums(n):
    assert sum(euler_phi(d) for d in divisors(n)) == n
    assert sum(moebius(d) for d in divisors(n)) == (1 if n == 1 else 0)


@given(st.integers(1, 300), st.integers(1, 300))
def test_multiplicativity(a, b):
    if math.gcd(a, b) == 1:
        assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)
        assert moebius(a * b) == moebius(a) * moebius(b)


def test_phi_matches_count_of_units():
    for n in range(1, 60):
        assert euler_phi(n) == sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1)


def test_nu2():
    assert nu2(0) == INFINITY
    assert [nu2(m) for m in (1, 2, 3, 4, 12, 96)] == [0, 1, 0, 2, 2, 5]


def test_binomial_out_of_range_is_zero():
    assert binomial(5, 2) == 10
    assert binomial(5, 6) == 0
    assert binomial(5, -1) == 0


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(NonExactDivision) as info:
        exact_div(7, 2)
    assert isinstance(info.value, ArithmeticError)
    assert info.value.code == "NON_EXACT_DIVISION"


def test_ramanujan_examples():
    assert ramanujan_sum(1, 0) == 1
    assert ramanujan_sum(4, 2) == -2
    assert ramanujan_sum(6, 1) == 1
    assert ramanujan_sum(12, 0) == 4


def test_ramanujan_against_roots_of_unity():
    for d in range(1, 31):
        for r in range(0, 2 * d + 1):
            assert ramanujan_sum(d, r) == ramanujan_numeric(d, r), (d, r)


@given(st.integers(1, 200), st.integers(0, 500))
def test_ramanujan_depends_only_on_gcd(d, r):
    assert ramanujan_sum(d, r) == ramanujan_sum(d, math.gcd(r, d))
    assert ramanujan_sum(d, r) == ramanujan_sum_closed(d, r)
    assert ramanujan_sum(d, r) == ramanujan_sum(d, r + d)


@given(st.integers(1, 200))
def test_ramanujan_at_zero_and_one(d):
    assert ramanujan_sum(d, 0) == euler_phi(d)
    assert ramanujan_sum(d, 1) == moebius(d)


def test_polynomial_basics():
    p = IntPolynomial([0, 1, 1, 1])
    assert str(p) == "x + x^2 + x^3"
    assert p.degree == 3
    assert IntPolynomial([1, 0, 0]) == IntPolynomial([1])
    assert IntPolynomial().is_zero()
    assert (IntPolynomial([1, 1]) ** 3).coeffs == (1, 3, 3, 1)
    assert p(2) == 14
    assert p.coeff(10) == 0
    assert one_minus_neg_x_pow(3).coeffs == (1, 0, 0, 1)
    assert one_minus_neg_x_pow(2).coeffs == (1, 0, -1)


def test_poly_divide_exact_rejects_remainders():
    with pytest.raises(NonExactDivision):
        poly_divide_exact(IntPolynomial([1, 0, 1]), IntPolynomial([1, 1]))
    with pytest.raises(NonExactDivision):
        poly_scale_exact(IntPolynomial([2, 3]), 2)


polys = st.lists(st.integers(-50, 50), min_size=1, max_size=8).map(IntPolynomial)


@given(polys, polys)
def test_poly_divide_round_trip(a, b):
    if b.is_zero() or b.coeffs[-1] not in (1, -1):
        return
    assert poly_divide_exact(poly_mul(a, b), b) == a


@given(polys, polys, st.integers(-5, 5))
def test_poly_mul_evaluates_pointwise(a, b, x):
    assert poly_mul(a, b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
    assert (a - b)(x) == a(x) - b(x)
