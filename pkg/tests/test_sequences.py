from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permlab.classes import catalan
from permlab.errors import InsufficientTerms
from permlab.sequences import (
    TWO_TWO_STACK_POLY, algebraic_residual, bareiss_det, cf_series, fine_catalan_check, hankel,
    hankel_report, ratio_profile, read_sequence, render_ratio, stieltjes_cf, write_sequence,
)

CATALAN = [catalan(n) for n in range(22)]
FINE = [1, 0, 1, 2, 6, 18, 57, 186, 622, 2120, 7338, 25724]


def laplace_det(m):
    if not m:
        return 1
    return sum((-1) ** j * m[0][j] * laplace_det([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)))


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=4, max_size=4),
       st.integers(1, 4))
def test_bareiss_matches_cofactor_expansion(rows, k):
    m = [r[:k] for r in rows[:k]]
    assert bareiss_det(m) == laplace_det(m)


def test_catalan_hankel_and_fraction():
    rep = hankel_report(CATALAN, 10)
    assert rep.determinants == (1,) * 10 and not rep.any_negative
    assert set(rep.shifted_determinants) == {1}
    cf = stieltjes_cf(CATALAN)
    assert cf.alphas[:11] == (1,) * 11 and cf.nonnegative


def test_factorials_have_integer_alphas():
    fact = [1]
    for n in range(1, 14):
        fact.append(fact[-1] * n)
    cf = stieltjes_cf(fact)
    # n! = S-fraction with alphas 1, 1, 1, 2, 2, 3, 3, ...
    assert cf.alphas[:9] == (1, 1, 1, 2, 2, 3, 3, 4, 4)


def test_finite_fraction_terminates():
    cf = stieltjes_cf([1, 1, 1, 1, 1, 1])
    assert cf.terminated and cf.alphas[:3] == (1, 1, 0)


def test_insufficient_terms():
    with pytest.raises(InsufficientTerms):
        hankel_report([1, 1, 2], 3)
    with pytest.raises(InsufficientTerms):
        stieltjes_cf([0, 1])


@given(st.lists(st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=6), min_size=1, max_size=7))
def test_cf_series_round_trip(alphas):
    n = 2 * len(alphas)
    series = cf_series(alphas, n)
    assert series[0] == alphas[0]
    back = stieltjes_cf(series)
    assert back.alphas[: len(alphas)] == tuple(alphas)


@given(st.integers(1, 8))
def test_hankel_is_symmetric(order):
    h = hankel(CATALAN, order)
    assert all(h[i][j] == h[j][i] for i in range(order) for j in range(order))


def test_fine_catalan_identity():
    assert fine_catalan_check(FINE, CATALAN, 11)
    broken = FINE[:]
    broken[5] += 1
    assert not fine_catalan_check(broken, CATALAN, 11)


def test_two_two_residual_detects_wrong_terms():
    good = [1, 1, 2, 6, 24, 116, 628, 3636, 21956, 136428, 865700]
    assert algebraic_residual(TWO_TWO_STACK_POLY, good).vanishes
    bad = good[:]
    bad[8] += 1
    assert algebraic_residual(TWO_TWO_STACK_POLY, bad).first_nonzero_degree == 8


def test_catalan_equation_residual():
    # x f^2 - f + 1 = 0
    poly = {(1, 2): 1, (0, 1): -1, (0, 0): 1}
    assert algebraic_residual(poly, CATALAN).vanishes
    assert algebraic_residual(poly, [1, 1, 2, 6]).first_nonzero_degree == 3


def test_ratio_rendering():
    r = ratio_profile([0, 1, 2], [0, 1, 6])
    assert r == [None, Fraction(1), Fraction(1, 3)]
    assert render_ratio(r[2]) == "0.333333333" and render_ratio(None) == "nan"


def test_sequence_file_round_trip(tmp_path):
    path = tmp_path / "seq.txt"
    write_sequence(path, FINE, comment="Fine numbers")
    assert read_sequence(path) == FINE
