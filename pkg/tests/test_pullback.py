from fractions import Fraction

import pytest

from paramodring.core.quadratic import QuadRational
from paramodring.errors import LevelError
from paramodring.paramod.eisenstein import eisenstein_coefficients
from paramodring.paramod.lift import LiftCoefficients, ParamodularSeries, gritsenko_lift
from paramodring.paramod.pullback import (
    fricke_eigenvalue, fricke_permute, p4_exponent, pullback_P4, pullback_P4_lift, pullback_P5,
    pullback_P8, staircase_window, witt_P1, witt_taylor,
)

HALF = Fraction(1, 2)


def test_p4_exponent():
    assert p4_exponent(1, -4, 1, 5) == (HALF, HALF)
    assert p4_exponent(2, -6, 1, 5) == (HALF, HALF)


def test_p4_fibre_sum(g6_level5):
    x = pullback_P4_lift(g6_level5, (1, 1))
    assert x.trunc == (1, 1)
    # c(1, -4) + c(2, -6)
    assert x.coeff(HALF, HALF) == 2
    assert x.coeff(0, 0) == 0


def test_p4_of_eisenstein():
    x = pullback_P4(eisenstein_coefficients(4, 5), (1, 1))
    assert x.coeff(0, 0) == 1
    assert x.coeff(HALF, HALF) == 480


def test_p4_materialised_matches_on_demand(g6_level5):
    F = gritsenko_lift(g6_level5, 2, 1)
    assert pullback_P4(F, (1, 1)).agrees_with(pullback_P4_lift(g6_level5, (1, 1)))


def test_p4_needs_odd_level():
    with pytest.raises(LevelError):
        pullback_P4(ParamodularSeries(2, 4, {}, (1, 1)))


def test_staircase_window():
    assert staircase_window([], 3, 2) == (3, 2)
    assert staircase_window([(Fraction(1), HALF)], 3, 2) == (1, 2)
    # equal areas: the taller rectangle wins
    assert staircase_window([(Fraction(2), Fraction(1))], 4, 2) == (2, 2)


def test_p4_window_cut_by_missing_data(g6_level5):
    x = pullback_P4_lift(g6_level5, (8, 2))
    assert x.trunc != (8, 2)
    assert x.coeff(HALF, HALF) == 2


def test_hilbert_pullback_fibres(g6_level5, g5_level7):
    p5 = pullback_P5(LiftCoefficients(g6_level5), 2)
    assert p5.trunc == 2
    assert p5.coeff(QuadRational(HALF, Fraction(-1, 10), 5)) == 1
    p8 = pullback_P8(LiftCoefficients(g5_level7), 2)
    assert p8.trunc == 2
    assert p8.coeff(QuadRational(HALF, Fraction(1, 4), 2)) == 1


def test_hilbert_pullback_levels(g6_level5):
    with pytest.raises(LevelError):
        pullback_P8(LiftCoefficients(g6_level5))
    with pytest.raises(LevelError):
        pullback_P5(ParamodularSeries(7, 4, {}, (1, 1)))


def test_witt_moments(g6_level5):
    F = gritsenko_lift(g6_level5, 1, 1)
    assert witt_P1(F).coeff(1, 1) == 0
    assert witt_taylor(F, 1).coeff(1, 1) == 0
    assert witt_taylor(F, 2).coeff(1, 1) == 0
    assert witt_taylor(F, 6).coeff(1, 1) == 4320
    assert witt_P1(F).trunc == (2, 2)
    with pytest.raises(ValueError):
        witt_taylor(F, -1)


def test_fricke_eigenvalues(g6_level5, g5_level7):
    assert fricke_eigenvalue(gritsenko_lift(g6_level5, 1, 1)) == 1
    assert fricke_eigenvalue(gritsenko_lift(g5_level7, 1, 1)) == -1
    assert fricke_eigenvalue(ParamodularSeries(5, 4, {(1, 0, 0): 1}, (1, 1))) is None
    with pytest.raises(ValueError):
        fricke_permute(gritsenko_lift(g6_level5, 2, 1))
