from fractions import Fraction

import pytest

from paramodring.errors import TruncationError
from paramodring.forms import deghilb
from paramodring.forms.classical import delta, eisenstein, eta_power, gamma2_e1, gamma2_e2
from paramodring.series.biexp import BiExp

T = 6
HALF = Fraction(1, 2)


def test_f_forms():
    f12, f21 = deghilb.f(1, 2, T), deghilb.f(2, 1, T)
    assert deghilb.f(1, 1, T).coeff(0, 0) == 1
    assert f12.coeff(0, 0) == HALF
    assert f12.expansion.swap().agrees_with(f21.expansion)
    with pytest.raises(ValueError):
        deghilb.f(3, 1, T)


def test_generator_coefficients():
    x2, x4 = deghilb.X2(T), deghilb.X4(T)
    assert (x2.coeff(0, 0), x2.coeff(HALF, 0), x2.coeff(HALF, HALF)) == (1, 0, 192)
    assert (x4.coeff(0, 0), x4.coeff(1, 0), x4.coeff(HALF, HALF)) == (0, 1, -2)
    assert deghilb.Delta6(T).coeff(HALF, HALF) == 1


def test_generator_symmetry_and_weights():
    assert deghilb.X2(T).symmetry == deghilb.SYMMETRIC
    x8 = deghilb.X8(T)
    assert x8.symmetry == deghilb.ANTISYMMETRIC
    assert x8.weight == 8
    assert x8.coeff(0, 1) == 1 and x8.coeff(1, 0) == -1
    prod = x8 * deghilb.X2(T)
    assert prod.weight == 10 and prod.symmetry == deghilb.ANTISYMMETRIC
    assert (x8 * x8).symmetry == deghilb.SYMMETRIC


def test_symmetrize_splits_a_form():
    x = (deghilb.f(1, 2, T).expansion)
    sym, anti = deghilb.symmetrize(x), deghilb.antisymmetrize(x)
    assert (sym + anti).agrees_with(x)
    assert deghilb.detect_symmetry(sym) == deghilb.SYMMETRIC
    assert deghilb.detect_symmetry(anti) == deghilb.ANTISYMMETRIC
    assert deghilb.detect_symmetry(x) == deghilb.MIXED


def test_gform_rules():
    with pytest.raises(ValueError):
        deghilb.X2(T) + deghilb.X4(T)
    with pytest.raises(ValueError):
        deghilb.GForm(2, deghilb.f(1, 2, T).expansion, "f12", deghilb.SYMMETRIC)


def test_delta6_constructions_agree():
    assert deghilb.Delta6(T).expansion.agrees_with(deghilb.Delta6_from_f(T).expansion)


def test_relation_R():
    assert deghilb.relation_R_residual(T).is_zero()
    perturbed = dict(deghilb.RELATION_R)
    perturbed[(0, 4, 0)] = 4095
    assert not deghilb.relation_R_residual(T, perturbed).is_zero()


def test_boundary_values():
    e1, e2 = gamma2_e1(T).expansion, gamma2_e2(T).expansion
    assert deghilb.phi(1, deghilb.X2(T)).agrees_with(e1)
    assert deghilb.phi(2, deghilb.X2(T)).agrees_with(e1)
    expected_x4 = (e1.scale(HALF) - e2) ** 2 * Fraction(1, 144)
    assert deghilb.phi(1, deghilb.X4(T)).agrees_with(expected_x4)
    assert deghilb.phi(1, deghilb.Delta6(T)).is_zero()
    eta8 = eta_power(8, T).expansion
    assert deghilb.phi(1, deghilb.X8(T)).agrees_with(eta8 * eta8.substitute_scale(2))


def test_diagonal_restriction():
    assert deghilb.diagonal_restriction(deghilb.X2(T)).agrees_with(eisenstein(4, T).expansion)
    assert deghilb.diagonal_restriction(deghilb.Delta6(T)).agrees_with(delta(T).expansion)
    assert deghilb.diagonal_restriction(deghilb.X4(T)).is_zero()


def test_a_star_generators():
    gens = deghilb.a_star_generators(T)
    assert [g.weight for g in gens] == [4, 6, 6, 8, 10, 12, 14, 16]
    assert [g.symmetry for g in gens[:5]] == [deghilb.SYMMETRIC] * 5
    assert [g.symmetry for g in gens[5:]] == [deghilb.ANTISYMMETRIC] * 3
    e4 = deghilb.rescaled_boundary(1, gens[0])
    assert e4.agrees_with(eisenstein(4, T).expansion)
    assert deghilb.rescaled_boundary(1, gens[5]).agrees_with(delta(T).expansion)


def test_a_star_membership():
    x2, x4, d6 = deghilb.X2(T), deghilb.X4(T), deghilb.Delta6(T)
    assert deghilb.a_star_membership(x2 * x2 - x4 * 48)
    assert not deghilb.a_star_membership(x2)
    assert deghilb.a_star_membership(d6)


def test_slice_outside_window():
    x = BiExp({(0, 0): 1}, (1, 1))
    with pytest.raises(TruncationError):
        x.slice(1, 2)
