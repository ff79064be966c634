import pytest
from hypothesis import given, strategies as st

from necksum.words import (
    BinaryWord,
    canonical_form,
    co_period,
    count_coperiod_div,
    count_lplus,
    count_lyndon,
    count_lyndon_total,
    count_necklaces,
    count_necklaces_total,
    enumerate_coperiod_div,
    enumerate_lplus,
    enumerate_lyndon,
    enumerate_lyndon_baseline,
    enumerate_necklaces,
    enumerate_necklaces_baseline,
    is_lyndon,
)

from oracles import coperiod, lplus_words, lyndon_words, necklace_classes, rotations

words = st.text(alphabet="01", min_size=1, max_size=16)


def test_examples():
    assert [str(w) for w in enumerate_lyndon(5, 3)] == ["00111", "01011"]
    assert co_period("0101") == 2
    assert co_period("0011") == 1
    nk = canonical_form("10110")
    assert str(nk) == "01011" and nk.is_primitive
    assert count_coperiod_div(4, 2, 2) == 2
    assert count_necklaces(6, 3) == 4
    assert count_lyndon(1, 0) == 1 and count_lyndon(1, 1) == 1


@given(words)
def test_canonical_form_is_min_rotation(w):
    nk = canonical_form(w)
    assert str(nk) == min(rotations(w))
    assert nk.coperiod == coperiod(w)
    assert is_lyndon(w) == (w == min(rotations(w)) and coperiod(w) == 1)


@given(words, st.integers(0, 40))
def test_rotation_invariance(w, i):
    rotated = BinaryWord.from_str(w).rotate(i)
    assert canonical_form(rotated) == canonical_form(w)
    assert co_period(rotated) == co_period(w)


def test_fkm_matches_baseline():
    for n in range(1, 13):
        for k in range(n + 1):
            assert enumerate_necklaces(n, k) == enumerate_necklaces_baseline(n, k)
            assert enumerate_lyndon(n, k) == enumerate_lyndon_baseline(n, k)


def test_enumerations_against_brute_force():
    for n in range(1, 11):
        for k in range(n + 1):
            classes = necklace_classes(n, k)
            got = {str(nk): nk.coperiod for nk in enumerate_necklaces(n, k)}
            assert got == classes
            assert [str(w) for w in enumerate_lyndon(n, k)] == lyndon_words(n, k)
            assert sorted(map(str, enumerate_lplus(n, k))) == sorted(lplus_words(n, k))
            for r in range(n):
                expect = sorted(w for w, j in classes.items() if r % j == 0)
                assert sorted(map(str, enumerate_coperiod_div(n, k, r))) == expect


def test_counts_against_enumeration():
    for n in range(1, 15):
        for k in range(n + 1):
            assert count_necklaces(n, k) == len(enumerate_necklaces(n, k))
            assert count_lyndon(n, k) == len(enumerate_lyndon(n, k))
            assert count_lplus(n, k) == len(enumerate_lplus(n, k))
            for r in range(n):
                assert count_coperiod_div(n, k, r) == len(enumerate_coperiod_div(n, k, r))
        assert count_necklaces_total(n) == sum(count_necklaces(n, k) for k in range(n + 1))
        assert count_lyndon_total(n) == sum(count_lyndon(n, k) for k in range(n + 1))


def test_coperiod_div_extremes():
    # r = 0: every necklace; r = 1: only primitive ones
    for n in range(1, 20):
        for k in range(n + 1):
            assert count_coperiod_div(n, k, 0) == count_necklaces(n, k)
            if n > 1:
                assert count_coperiod_div(n, k, 1) == count_lyndon(n, k)


def test_coperiod_count_reduces_r():
    assert count_coperiod_div(6, 2, 8) == count_coperiod_div(6, 2, 2)
    with pytest.raises(ValueError):
        enumerate_coperiod_div(6, 2, 6)


def test_invalid_parameters():
    with pytest.raises(ValueError):
        count_necklaces(3, 4)
    with pytest.raises(ValueError):
        enumerate_lyndon(0, 0)
    with pytest.raises(ValueError):
        BinaryWord.from_str("012")
