from fractions import Fraction

import pytest

from paramodring.config import settings
from paramodring.errors import InsufficientJacobiData, JacobiDataError
from paramodring.paramod.jacobi import (
    JacobiFormData, format_jacobi, parse_jacobi, reduce_index, write_jacobi,
)
from paramodring.paramod.tables import check_data_dir, load_table


def test_shipped_table(g6_level5):
    assert (g6_level5.weight, g6_level5.index, g6_level5.max_n) == (6, 5, 2)
    assert [g6_level5.coeff(1, r) for r in (4, 3, 0, -4)] == [1, -2, -50, 1]
    assert g6_level5.coeff(0, 0) == 0
    # r^2 > 4Nn vanishes without being listed
    assert g6_level5.coeff(1, 5) == 0


def test_odd_weight_sign(g5_level7):
    assert g5_level7.coeff(1, 5) == -1
    assert g5_level7.coeff(1, -5) == 1
    assert g5_level7.coeff(1, 0) == 0


def test_periodicity_reaches_beyond_listed_rows(g6_level5):
    # c(2, 6) and c(1, -4) share discriminant 4 and residue mod 10
    assert reduce_index(2, 6, 5) == (1, -4)
    assert g6_level5.coeff(2, 6) == g6_level5.coeff(1, -4)
    assert g6_level5.coeff(3, 0) is None
    with pytest.raises(InsufficientJacobiData) as e:
        g6_level5.require(3, 0)
    assert e.value.missing == [(3, 0)]


def test_reduce_index():
    assert reduce_index(0, 0, 5) == (0, 0)
    assert reduce_index(1, -4, 5) == (1, -4)
    assert reduce_index(1, 5, 5) == (1, 5)
    assert reduce_index(3, 7, 5) == (1, -3)


def test_empty_body_is_zero_form(write_table):
    data = parse_jacobi(write_table(8, 5, [], precision=3))
    assert data.is_zero()
    assert data.coeff(2, 1) == 0
    assert data.coeff(4, 1) is None


@pytest.mark.parametrize("weight, index, rows, precision, message", [
    (6, 5, [(1, 5, 1)], None, "Koecher"),
    (5, 7, [(1, 0, 3)], None, "parity"),
    (5, 7, [(2, 7, 1)], None, "parity"),
    (6, 5, [(1, 1, 1), (1, 1, 1)], None, "duplicate"),
    (6, 5, [(1, 4, 1), (2, 6, 2)], None, "periodicity"),
    (6, 5, [(2, 0, 1)], 1, "precision"),
    (6, 5, [(1, 1, "x")], None, "malformed"),
])
def test_rejected_tables(write_table, weight, index, rows, precision, message):
    with pytest.raises(JacobiDataError, match=message):
        parse_jacobi(write_table(weight, index, rows, precision))


def test_error_names_the_line(write_table):
    path = write_table(6, 5, [(1, 1, 1), (1, 1, 1)])
    with pytest.raises(JacobiDataError) as e:
        parse_jacobi(path)
    assert e.value.line == 5
    assert e.value.path == str(path)


def test_header_rules(write_table, tmp_path):
    with pytest.raises(JacobiDataError, match="after coefficient rows"):
        parse_jacobi(write_table(6, 5, [(1, 1, 1)], extra="weight 6\n"))
    path = tmp_path / "headless.jf"
    path.write_text("index 5\n1 1 1\n")
    with pytest.raises(JacobiDataError, match="weight"):
        parse_jacobi(path)
    with pytest.raises(JacobiDataError):
        parse_jacobi(tmp_path / "absent.jf")


def test_comments_and_blank_lines(write_table):
    data = parse_jacobi(write_table(6, 5, [(1, 1, "3/4")], extra="\n# trailing note\n"))
    assert data.coeff(1, 1) == Fraction(3, 4)
    assert data.coeff(1, -1) == Fraction(3, 4)


def test_write_and_read_back(g6_level5, tmp_path):
    path = write_jacobi(g6_level5, tmp_path / "out" / "g6.jf")
    again = parse_jacobi(path)
    assert again.rows() == g6_level5.rows()
    assert format_jacobi(again) == format_jacobi(g6_level5)


def test_on_demand_table():
    data = JacobiFormData.from_function(4, 1, lambda n, r: Fraction(n))
    assert data.coeff(2, 1) == 2
    assert not data.is_zero()
    with pytest.raises(JacobiDataError):
        format_jacobi(data)
    assert format_jacobi(data, 1).splitlines()[3] == "precision 1"


def test_data_dir(tmp_path, monkeypatch):
    assert check_data_dir().is_dir()
    assert load_table(7, "g5").weight == 5
    monkeypatch.setattr(settings, "paramod_data", str(tmp_path / "missing"))
    with pytest.raises(JacobiDataError):
        check_data_dir()
    monkeypatch.setattr(settings, "paramod_data", str(tmp_path))
    with pytest.raises(JacobiDataError, match="no Jacobi tables"):
        check_data_dir()
