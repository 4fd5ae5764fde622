from fractions import Fraction

import pytest

from paramodring.core.complexq import ComplexRational
from paramodring.errors import LevelError, SingularBlock
from paramodring.sympcheck.embeddings import (
    PRINTED_U, S, Report, catalogue, phi1, phi4, verify_embedding, verify_H5_fixing,
    verify_hilbert_inversion,
)
from paramodring.sympcheck.matrices import (
    J, HalfSpacePoint, Mat4, conjugation, fricke_point, in_paramodular, is_symplectic, moebius_1,
    moebius_act, translation,
)

I = ComplexRational(0, 1)


def test_symplectic_and_paramodular_membership():
    assert is_symplectic(Mat4.identity()) and is_symplectic(J)
    assert in_paramodular(J, 1)
    assert not in_paramodular(J, 5)
    assert in_paramodular(translation(1, 1, Fraction(1, 5)), 5)
    assert not in_paramodular(translation(0, 0, Fraction(1, 10)), 5)
    assert not in_paramodular(Mat4([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]), 5)


def test_mat4_shape_and_singular_conjugation():
    with pytest.raises(ValueError):
        Mat4([[1, 0], [0, 1]])
    with pytest.raises(SingularBlock):
        conjugation(((1, 2), (2, 4)))


def test_upper_half_plane_action():
    assert moebius_1(S, I) == I
    assert moebius_1(((1, 1), (0, 1)), I) == ComplexRational(1, 1)
    with pytest.raises(SingularBlock):
        moebius_1(((0, 1), (0, 0)), I)


def test_siegel_action_and_fricke_map():
    Z = HalfSpacePoint(I, 0, I * Fraction(1, 5))
    assert moebius_act(Mat4.identity(), Z) == Z
    assert fricke_point(Z, 5) == Z
    W = HalfSpacePoint(ComplexRational(1, 2), ComplexRational(0, Fraction(1, 2)), ComplexRational(3, 1))
    assert fricke_point(fricke_point(W, 7), 7) == W
    with pytest.raises(ValueError):
        HalfSpacePoint(1, 0, I)


def test_embeddings_land_in_paramodular_group():
    m1 = ((1, 1), (0, 1))
    m2 = ((1, 3), (0, 1))
    assert in_paramodular(phi1(m1, S, 5), 5)
    assert in_paramodular(phi4(m1, m2, 7), 7)
    with pytest.raises(LevelError):
        phi4(m1, m2, 6)


@pytest.mark.parametrize("which, level", [("phi1", 5), ("phi1", 7), ("phi4", 5), ("phi4", 7)])
def test_verify_embedding(which, level):
    report = verify_embedding(which, level)
    assert report.passed, report.summary()


def test_verify_embedding_rejects_unknown():
    with pytest.raises(ValueError):
        verify_embedding("phi2", 5)


def test_h5_fixing_and_control():
    fixing, control = verify_H5_fixing()
    assert fixing.passed, fixing.summary()
    assert control.passed, control.summary()
    wrong, _ = verify_H5_fixing(u=PRINTED_U)
    assert not wrong.passed


@pytest.mark.parametrize("level", [5, 7])
def test_hilbert_inversion(level):
    report = verify_hilbert_inversion(level)
    assert report.passed, report.summary()


def test_hilbert_inversion_levels():
    with pytest.raises(LevelError):
        verify_hilbert_inversion(6)


def test_catalogue():
    report = catalogue()
    assert report.passed, report.summary()


def test_report_summary():
    report = Report("demo")
    assert not report.passed
    report.record(True, "fine")
    report.record(False, "sample 1 broke")
    assert not report.passed
    assert report.summary() == "demo: 1 of 2 failed, first: sample 1 broke"
