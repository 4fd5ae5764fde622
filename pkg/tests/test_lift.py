import pytest

from paramodring.errors import InsufficientJacobiData, ParamodError, TruncationError
from paramodring.paramod.jacobi import JacobiFormData, parse_jacobi
from paramodring.paramod.lift import (
    CombinedCoefficients, FrickeCoefficients, LiftCoefficients, ParamodularSeries, gritsenko_lift,
    koecher, lift_is_symmetric,
)


def test_koecher_cone():
    assert koecher(1, 4, 1, 5)
    assert not koecher(1, 5, 1, 5)
    assert not koecher(-1, 0, 0, 5)
    assert koecher(0, 0, 3, 5)


def test_lift_reads_jacobi_coefficients(g6_level5):
    F = gritsenko_lift(g6_level5, 2, 1)
    assert F.box == (2, 1)
    assert [F.coeff(1, b, 1) for b in (4, 3, 0, -4)] == [1, -2, -50, 1]
    assert F.coeff(2, 2, 1) == -33
    assert F.coeff(2, 6, 1) == 1
    # cusp form: no boundary terms
    assert F.coeff(1, 0, 0) == 0 and F.coeff(0, 0, 0) == 0
    with pytest.raises(TruncationError):
        F.coeff(3, 0, 0)
    assert F.alpha(0, 0, 2) is None


def test_hecke_type_sum(write_table):
    phi = parse_jacobi(write_table(6, 5, [(1, 1, 3), (4, 2, 7)], precision=4))
    lift = LiftCoefficients(phi)
    assert lift.terms(2, 2, 2) == [(1, 4, 2), (2, 1, 1)]
    assert lift.alpha(2, 2, 2) == 7 + 32 * 3


def test_missing_jacobi_data_is_reported(g6_level5):
    lift = LiftCoefficients(g6_level5)
    assert lift.alpha(1, 0, 3) is None
    assert lift.missing(1, 0, 3) == [(3, 0)]
    with pytest.raises(InsufficientJacobiData) as e:
        gritsenko_lift(g6_level5, 1, 3)
    assert (3, 0) in e.value.missing


def test_lift_needs_weight_four():
    with pytest.raises(ValueError):
        LiftCoefficients(JacobiFormData(3, 5, 1))


def test_odd_weight_lift(g5_level7):
    F = gritsenko_lift(g5_level7, 1, 1)
    assert F.coeff(1, 5, 1) == -1
    assert F.coeff(1, -5, 1) == 1
    assert F.coeff(0, 0, 0) == 0
    assert lift_is_symmetric(F)


def test_lift_symmetry(g6_level5):
    assert lift_is_symmetric(gritsenko_lift(g6_level5, 2, 1))
    assert not lift_is_symmetric(ParamodularSeries(5, 4, {(1, 0, 0): 1}, (1, 1)))


def test_series_ring_operations():
    A = ParamodularSeries(5, 4, {(0, 0, 0): 1, (1, 0, 0): 2}, (2, 2))
    B = ParamodularSeries(5, 6, {(0, 0, 1): 3}, (1, 2))
    P = A * B
    assert (P.weight, P.box) == (10, (1, 2))
    assert P.coeff(0, 0, 1) == 3 and P.coeff(1, 0, 1) == 6
    assert (A * 2).coeff(1, 0, 0) == 4
    assert (A - A).is_zero()
    with pytest.raises(ValueError):
        A + B
    with pytest.raises(ValueError):
        A * ParamodularSeries(7, 4, {}, (1, 1))


def test_series_rejects_points_outside_the_cone():
    with pytest.raises(ParamodError):
        ParamodularSeries(5, 4, {(1, 5, 1): 1}, (1, 1))


def test_series_json(g6_level5):
    F = gritsenko_lift(g6_level5, 1, 1)
    data = F.to_json()
    assert data["box"] == [1, 1]
    assert [1, -4, 1, "1"] in data["coeffs"]
    assert ParamodularSeries.from_json(data) == F


def test_combined_and_fricke_providers(g6_level5, g7_level5):
    lift = LiftCoefficients(g6_level5)
    combined = CombinedCoefficients([(2, lift), (-1, lift)])
    assert combined.alpha(1, 4, 1) == 1
    assert combined.alpha(1, 0, 3) is None
    with pytest.raises(ValueError):
        CombinedCoefficients([(1, lift), (1, LiftCoefficients(g7_level5))])
    assert FrickeCoefficients(lift).alpha(1, -3, 1) == lift.alpha(1, 3, 1) == -2
