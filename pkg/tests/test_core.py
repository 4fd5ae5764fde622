from fractions import Fraction

import pytest

from paramodring.core.complexq import ComplexRational
from paramodring.core.quadratic import QuadRational, quad_conjugate, quad_is_positive
from paramodring.core.rational import compact, format_rational, parse_rational
from paramodring.errors import DiscriminantMismatch


def test_parse_and_format_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational(" 7 ") == 7
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-5, 3)) == "-5/3"


@pytest.mark.parametrize("text", ["1/0", "abc", "1.5", ""])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_compact_returns_int_for_integral():
    assert compact(Fraction(6, 3)) == 2
    assert isinstance(compact(Fraction(6, 3)), int)
    assert compact(Fraction(1, 3)) == Fraction(1, 3)


def test_quadratic_arithmetic():
    x = QuadRational(1, 1, 5)
    assert x * x.conjugate() == -4
    assert x.norm() == -4
    assert x.trace() == 2
    assert x * x.inverse() == 1
    assert (x ** 2) == QuadRational(6, 2, 5)


def test_quadratic_mixed_fields_raise():
    with pytest.raises(DiscriminantMismatch):
        QuadRational(1, 0, 5) + QuadRational(0, 1, 2)


def test_quadratic_needs_squarefree():
    with pytest.raises(ValueError):
        QuadRational(1, 1, 4)


def test_quadratic_order():
    assert QuadRational(0, 1, 2) > 1
    assert QuadRational(Fraction(3, 2), -1, 2) > 0
    assert QuadRational(Fraction(7, 5), -1, 2) < 0
    assert QuadRational(1, 0, 5) == 1


def test_total_nonnegativity():
    assert QuadRational(Fraction(1, 2), Fraction(-1, 10), 5).is_totally_nonnegative()
    assert not QuadRational(0, 1, 2).is_totally_nonnegative()
    assert QuadRational(0, 0, 2).is_totally_nonnegative()


def test_quadratic_text():
    x = QuadRational.parse("1/2-1/10*sqrt(5)")
    assert x == QuadRational(Fraction(1, 2), Fraction(-1, 10), 5)
    assert str(x) == "1/2-1/10*sqrt(5)"
    with pytest.raises(ValueError):
        QuadRational.parse("sqrt(5)")


def test_complex_rational():
    z = ComplexRational(1, 2) * ComplexRational(3, -1)
    assert z == ComplexRational(5, 5)
    assert ComplexRational(1, 1).inverse() == ComplexRational(Fraction(1, 2), Fraction(-1, 2))
    assert ComplexRational(2, 0) == 2
    with pytest.raises(ZeroDivisionError):
        ComplexRational(0, 0).inverse()


def test_complex_over_quadratic_field():
    r = QuadRational(0, 1, 5)
    z = ComplexRational(r, 1)
    assert (z * z.conjugate()).re == 6
    assert (z / z) == 1


def test_conjugate_and_total_positivity():
    lam = QuadRational(Fraction(1, 2), Fraction(-1, 10), 5)
    assert quad_conjugate(lam) == QuadRational(Fraction(1, 2), Fraction(1, 10), 5)
    assert quad_conjugate(quad_conjugate(lam)) == lam
    assert quad_is_positive(QuadRational(1, Fraction(-1, 4), 2))
    assert quad_is_positive(QuadRational(-1, Fraction(1, 2), 5))
    assert not quad_is_positive(QuadRational(0, 0, 2))
    x = QuadRational(3, -2, 2)
    assert quad_is_positive(x) != quad_is_positive(-x)
