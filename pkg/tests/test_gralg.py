from fractions import Fraction

import pytest

from paramodring.errors import WindowTooSmall, WindowUnstable
from paramodring.gralg import linalg
from paramodring.gralg.graded import (
    GeneratorSet, dimension_by_rank, hironaka_audit, monomials_of_weight, relation_residual,
    relations_in_weight,
)
from paramodring.gralg.hilbert import (
    A_STAR_SERIES, A_SYM_SERIES, K5_SERIES, K7_SERIES, MG_SYM_SERIES, HilbertSeries, hilbert_expand,
)
from paramodring.gralg.presets import build_preset, protocol_windows
from paramodring.gralg.stanley import cyclotomic_product_test, palindrome_test
from paramodring.series.qexp import QExp


def test_linalg_rank_nullspace_solve():
    rows = [[1, 2], [2, 4]]
    assert linalg.rank(rows) == 1
    assert linalg.nullspace(rows, 2) == [[2, -1]]
    assert linalg.solve([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    assert linalg.solve([[1, 1], [1, 1]], [1, 2]) is None
    assert linalg.rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1


def test_primitive_vector():
    assert linalg.primitive([Fraction(-1, 2), Fraction(1, 3)]) == [3, -2]
    assert linalg.primitive([0, 0]) == [0, 0]


def test_hilbert_expansion():
    assert hilbert_expand(MG_SYM_SERIES, 6) == [1, 0, 1, 0, 2, 0, 3]
    assert hilbert_expand(HilbertSeries([1], (1,)), 4) == [1] * 5
    assert A_SYM_SERIES.expand(12)[12] == 5
    assert K5_SERIES.expand(5)[4:] == [1, 1]


def test_hilbert_normalize_and_equality():
    h = HilbertSeries([1, -1], (1, 2)).normalize()
    assert h.denominators == (2,)
    assert h.numerator_coeffs() == [1]
    correction = HilbertSeries([1], (2, 6)).shift(2)
    assert A_SYM_SERIES == MG_SYM_SERIES - correction
    assert A_STAR_SERIES == A_SYM_SERIES + HilbertSeries([1], (2, 4, 6)).shift(12)


def test_hilbert_rejects_bad_denominator():
    with pytest.raises(ValueError):
        HilbertSeries([1], (0,))


def test_stanley_criteria():
    assert palindrome_test([1, 2, 1]) and cyclotomic_product_test([1, 2, 1])
    assert not palindrome_test([1, 2])
    assert not cyclotomic_product_test([1, 3, 1])
    for series in (K5_SERIES, K7_SERIES):
        assert palindrome_test(series)
        assert not cyclotomic_product_test(series)
    with pytest.raises(ValueError):
        palindrome_test([0, 1])


def test_monomials_of_weight():
    assert monomials_of_weight([2, 4, 6], 8) == [(4, 0, 0), (2, 1, 0), (1, 0, 1), (0, 2, 0)]
    assert monomials_of_weight([2, 4, 6], 0) == [(0, 0, 0)]
    assert monomials_of_weight([2, 4, 6], 3) == []
    assert len(monomials_of_weight([2, 4, 6, 8], 16)) == 15


def _pair(b, windows=(3, 4)):
    a = QExp({0: 1, 1: 3}, 4)
    return GeneratorSet([("a", 1, a), ("b", 1, b)], windows)


def test_relation_of_proportional_generators():
    gens = _pair(QExp({0: 2, 1: 6}, 4))
    relations = relations_in_weight(gens, 1)
    assert relations == [[((1, 0), Fraction(2)), ((0, 1), Fraction(-1))]]
    assert relation_residual(gens, relations[0]).is_zero()
    assert gens.label_of((2, 1)) == "a^2*b"
    assert gens.label_of((0, 0)) == "1"


def test_window_protocol_errors():
    with pytest.raises(WindowTooSmall):
        dimension_by_rank(_pair(QExp({0: 1}, 4), windows=(1, 4)), 1)
    late = QExp({0: 1, 1: 3, 3: 1}, 4)
    with pytest.raises(WindowUnstable):
        dimension_by_rank(_pair(late), 1)
    with pytest.raises(ValueError):
        _pair(late, windows=(4, 3))


def test_preset_ranks():
    gamma2 = build_preset("gamma2", 8)
    assert dimension_by_rank(gamma2, 8) == 5
    mg = build_preset("MG", 8)
    free = mg.subset(["X2", "X4", "Delta6"])
    assert dimension_by_rank(free, 8) == 4
    assert relations_in_weight(mg, 8) == []
    with pytest.raises(ValueError):
        build_preset("nope", 8)


def test_protocol_windows_nest():
    small, large = protocol_windows(8)
    assert small < large
    assert small > 2


def test_hironaka_audit_on_mg():
    mg = build_preset("MG", 8)
    table = hironaka_audit(mg.subset(["X2", "X4", "Delta6"]), mg.subset(["X8"]), 8)
    assert all(row["match"] for row in table)
    assert table[8]["predicted"] == 5
