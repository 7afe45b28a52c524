"""Continued fractions, 2x2 matrices, greedy expansions, modular inverses."""

import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import matrix_cf_value
from tunnel_slopes import (
    INFINITY,
    MAT_IDENTITY,
    MAT_L,
    MAT_U,
    DomainError,
    Mat2,
    SimpleSlope,
    cf_eval,
    expand_all_even,
    expand_odd_numerator,
    mod_inverse,
)


def test_cf_eval_basic_values():
    assert cf_eval([2, 3]) == Fraction(7, 3)
    assert cf_eval([2, 1, -2, -1]) == Fraction(7, 2)
    assert cf_eval([-2, -1]) == -3
    assert cf_eval([4]) == 4
    assert cf_eval([0]) == 0


def test_cf_eval_formal_infinity_rules():
    assert cf_eval([1, 0]) is INFINITY
    assert cf_eval([2, 0, 2]) == 4
    assert cf_eval([3, 0, 0]) == 3
    assert cf_eval([0, 2]) == Fraction(1, 2)


def test_cf_eval_rejects_empty():
    with pytest.raises(DomainError):
        cf_eval([])


def test_cf_eval_matches_matrix_oracle_exhaustively_on_small_entries():
    for length in (1, 2, 3):
        for entries in product(range(-2, 3), repeat=length):
            recursive = cf_eval(entries)
            algebraic = matrix_cf_value(entries)
            if recursive is INFINITY or algebraic is INFINITY:
                assert recursive is algebraic, entries
            else:
                assert recursive == algebraic, entries


@settings(max_examples=300, derandomize=True)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=8))
def test_cf_eval_matches_matrix_oracle_random(entries):
    recursive = cf_eval(entries)
    algebraic = matrix_cf_value(entries)
    if recursive is INFINITY or algebraic is INFINITY:
        assert recursive is algebraic
    else:
        assert recursive == algebraic


def test_matrix_powers_and_inverse():
    assert MAT_U**5 == Mat2(1, 5, 0, 1)
    assert MAT_L**-3 == Mat2(1, 0, -3, 1)
    m = Mat2(2, 1, 1, 1)
    assert m.det() == 1
    assert m**-1 * m == MAT_IDENTITY
    assert (m * m).det() == 1
    with pytest.raises(DomainError):
        Mat2(2, 0, 0, 1) ** -1


def test_expand_odd_numerator_golden_values():
    assert expand_odd_numerator(Fraction(7, 3)) == (2, 3)
    assert expand_odd_numerator(Fraction(7, 2)) == (4, -2)
    assert expand_odd_numerator(Fraction(413, 227)) == (2, -6, 2, 6, 2, 1)
    assert expand_odd_numerator(Fraction(25, 21)) == (2, -1, -4, -4)
    assert expand_odd_numerator(Fraction(341, 60)) == (6, -3, -6, -3)


def test_expand_odd_numerator_tie_breaking():
    # at an odd integer the even step takes the smaller even neighbor,
    # at a half-integer the integer step takes the floor
    assert expand_odd_numerator(3) == (2, 1)
    assert expand_odd_numerator(1) == (0, 1)
    assert expand_odd_numerator(-13) == (-14, 1)
    assert expand_odd_numerator(Fraction(7, 2)) == (4, -2)


def test_expand_odd_numerator_rejects_even_numerator():
    with pytest.raises(DomainError):
        expand_odd_numerator(Fraction(4, 3))


@settings(max_examples=300, derandomize=True)
@given(st.integers(-2000, 2000), st.integers(1, 999))
def test_expand_odd_numerator_round_trip_and_shape(k, den):
    x = Fraction(2 * k + 1, den)
    cf = expand_odd_numerator(x)
    assert cf_eval(cf) == x
    assert len(cf) % 2 == 0
    assert all(cf[i] % 2 == 0 for i in range(0, len(cf), 2))
    assert all(cf[i] != 0 for i in range(1, len(cf), 2))


def test_expand_all_even_golden_values():
    assert expand_all_even(413, 227) == (-2, -4, -2, 8, -2, 2)
    assert expand_all_even(3, 1) == (-2, 2)
    assert expand_all_even(5, 2) == (2, 2)
    assert expand_all_even(7, 1) == (-2, 2, -2, 2, -2, 2)
    assert expand_all_even(7, 6) == (2, -2, 2, -2, 2, -2)


def test_expand_all_even_invariants_over_small_range():
    for a in range(3, 60, 2):
        for b in range(1, a):
            if math.gcd(a, b) != 1:
                continue
            cf = expand_all_even(a, b)
            bhat = b if b % 2 == 0 else b - a
            assert cf_eval(cf) == Fraction(a, bhat)
            assert len(cf) % 2 == 0
            assert all(e % 2 == 0 for e in cf)
            assert cf[-1] != 0
            assert 0 not in cf


def test_expand_all_even_accepts_negative_second_parameter():
    cf = expand_all_even(413, -227)
    assert cf_eval(cf) == Fraction(413, -227 - 413)
    assert len(cf) % 2 == 0 and all(e % 2 == 0 for e in cf) and cf[-1] != 0


def test_expand_all_even_rejects_bad_inputs():
    for a, b in [(4, 1), (1, 1), (9, 0), (9, 9), (9, 11), (9, 3)]:
        with pytest.raises(DomainError):
            expand_all_even(a, b)


def test_mod_inverse_golden_and_errors():
    assert mod_inverse(227, 413) == 131
    assert mod_inverse(222, 493) == 171
    assert mod_inverse(1, 2) == 1
    with pytest.raises(DomainError):
        mod_inverse(3, 1)
    with pytest.raises(DomainError):
        mod_inverse(6, 9)


def test_simple_slope_normalization_and_display():
    assert SimpleSlope.from_fraction(Fraction(46, 25)) == SimpleSlope(21, 25)
    assert SimpleSlope.from_fraction(Fraction(-1, 3)) == SimpleSlope(2, 3)
    assert SimpleSlope.from_fraction(Fraction(7, 1)) == SimpleSlope(0, 1)
    assert SimpleSlope(1, 5).negate() == SimpleSlope(4, 5)
    assert str(SimpleSlope(21, 25)) == "[ 21/25 ]"
    assert str(SimpleSlope(0, 1)) == "[ 0/1 ]"


def test_simple_slope_rejects_invalid():
    for p, q in [(1, 0), (3, 2), (-1, 3), (2, 4), (0, 3)]:
        with pytest.raises(DomainError):
            SimpleSlope(p, q)
