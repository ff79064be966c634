import math
import random

import pytest
from hypothesis import given, strategies as st

from necksum.arith import IntPolynomial
from necksum.errors import NotCoprime, ZNotCoprime
from necksum.subsets import (
    ResidueSubset,
    Universe,
    affine_bijection,
    bezout_solve,
    count_s_short,
    count_sbar,
    count_stanley_total,
    count_subsets_dp,
    enumerate_subsets,
    s1_short_poly,
    sbar_generating_poly,
    sbar_total,
    split_by_top,
)

from oracles import subsets_mod


def test_worked_example():
    got = [s.render() for s in enumerate_subsets(6, 3, 2)]
    assert got == ["{1,2,5}", "{1,3,4}", "{3,5,6}"]
    assert [s.render(zero_based=True) for s in enumerate_subsets(6, 3, 2)] == ["{1,2,5}", "{1,3,4}", "{0,3,5}"]
    t = bezout_solve(6, 3, 2)
    assert t.is_valid()
    images = sorted(affine_bijection(s, t.y, t.z).render() for s in enumerate_subsets(6, 3, 2))
    assert images == ["{1,2,4}", "{2,5,6}", "{3,4,6}"]


def test_sbar_poly_example():
    # {1,2,3,4} sums to 10 = 2 mod 4, so the top coefficient is 1
    assert sbar_generating_poly(4, 2) == IntPolynomial([0, 1, 1, 1, 1])


def test_counts_against_brute_force():
    for n in range(1, 15):
        for k in range(n + 1):
            for r in range(n):
                full = len(subsets_mod(n, k, r))
                assert count_sbar(n, k, r) == full
                assert len(enumerate_subsets(n, k, r)) == full
                assert count_subsets_dp(n, k, r) == full
                if k <= n - 1:
                    short = len(subsets_mod(n, k, r, top=n - 1))
                    assert count_s_short(n, k, r) == short
                    assert len(enumerate_subsets(n, k, r, Universe.SHORT)) == short
                    assert count_subsets_dp(n, k, r, Universe.SHORT) == short


def test_generating_polynomials():
    for n in range(1, 13):
        for r in range(n):
            poly = sbar_generating_poly(n, r)
            assert [poly.coeff(k) for k in range(n + 1)] == [count_sbar(n, k, r) for k in range(n + 1)]
            assert sbar_total(n, r) == sum(poly.coeffs)
        s1 = s1_short_poly(n)
        assert [s1.coeff(k) for k in range(n)] == [len(subsets_mod(n, k, 1, top=n - 1)) for k in range(n)]


def test_dp_agrees_at_larger_n():
    for n in (40, 57, 64):
        for k in (0, 3, 7, n // 2):
            for r in (0, 1, n - 1):
                assert count_sbar(n, k, r) == count_subsets_dp(n, k, r)


def test_stanley_total():
    for n in range(1, 21):
        assert sum(count_sbar(n, k, 0) for k in range(n + 1)) == count_stanley_total(n)


def test_r_reduced_mod_n():
    assert count_sbar(5, 2, 7) == count_sbar(5, 2, 2)
    with pytest.raises(ValueError):
        enumerate_subsets(5, 2, 5)
    with pytest.raises(ValueError):
        count_sbar(5, 6, 0)


def test_split_by_top():
    assert split_by_top(ResidueSubset.of(6, [3, 5, 6])) == ("k-1", ResidueSubset.of(6, [3, 5]))
    assert split_by_top(ResidueSubset.of(6, [1, 2, 5]))[0] == "k"


def test_bezout_errors():
    with pytest.raises(NotCoprime):
        bezout_solve(6, 2, 4)
    with pytest.raises(ZNotCoprime):
        affine_bijection(ResidueSubset.of(6, [1]), 0, 2)


@given(st.integers(1, 60), st.integers(0, 60), st.integers(0, 60))
def test_bezout_triple_valid(n, k, r):
    if math.gcd(n, math.gcd(k, r)) != 1:
        return
    t = bezout_solve(n, k, r)
    assert n * t.x + k * t.y + r * t.z == 1
    assert math.gcd(t.z, n) == 1


def test_affine_map_is_bijection_random():
    rng = random.Random(20261019)
    done = 0
    while done < 100:
        n, k, r = rng.randint(1, 12), rng.randint(0, 12), rng.randint(0, 11)
        if k > n or math.gcd(n, math.gcd(k, r)) != 1:
            continue
        r %= n
        t = bezout_solve(n, k, r)
        src = enumerate_subsets(n, k, r)
        dst = {affine_bijection(s, t.y, t.z) for s in src}
        assert len(dst) == len(src)
        assert dst == set(enumerate_subsets(n, k, 1 % n))
        done += 1
