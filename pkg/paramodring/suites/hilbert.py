"""Hilbert series closed forms and Stanley's criteria."""

import math

from paramodring.gralg.hilbert import (
    A_STAR_SERIES, A_SYM_SERIES, CATALOGUE, K5_SERIES, K7_SERIES, MG_SYM_SERIES, HilbertSeries,
)
from paramodring.gralg.stanley import cyclotomic_product_test, palindrome_test


def expansion_examples():
    got = (
        A_SYM_SERIES.expand(12)[12],
        HilbertSeries([1], (1,)).expand(6),
        K5_SERIES.expand(5)[4:6],
    )
    expected = (5, [1] * 7, [1, 1])
    return got == expected, f"A*sym at t^12, 1/(1-t), K(5) at t^4 and t^5: {got}"


def _stanley(series: HilbertSeries, label: str):
    pal = palindrome_test(series)
    cyc = cyclotomic_product_test(series)
    ok = pal and not cyc
    return ok, f"{label} numerator palindromic={pal}, cyclotomic product={cyc}"


def stanley_k5():
    return _stanley(K5_SERIES, "M(K(5))")


def stanley_k7():
    return _stanley(K7_SERIES, "M(K(7))")


def stanley_sanity():
    p = [1, 2, 1]
    return palindrome_test(p) and cyclotomic_product_test(p), "1 + 2t + t^2 should pass both tests"


def a_sym_identity():
    correction = HilbertSeries({2: 1}, (2, 6))
    ok = A_SYM_SERIES == MG_SYM_SERIES - correction
    return ok, f"Hilb A*sym = {A_SYM_SERIES!r}, Hilb M^sym(G) - t^2/((1-t^2)(1-t^6)) = {MG_SYM_SERIES - correction!r}"


def a_sym_codimension():
    kmax = 40
    a = A_SYM_SERIES.expand(kmax)
    m = MG_SYM_SERIES.expand(kmax)
    for k in range(0, kmax + 1, 2):
        if a[k] != m[k] - math.ceil(k / 6):
            return False, f"weight {k}: {a[k]} against {m[k]} - ceil({k}/6)"
    return True, f"even weights up to {kmax}"


def a_star_antisymmetric_part():
    antisym = HilbertSeries({12: 1}, (2, 4, 6))
    ok = A_STAR_SERIES == A_SYM_SERIES + antisym
    return ok, "Hilb A* is not Hilb A*sym + t^12 Hilb M^sym(G)"


def catalogue_normalises():
    for name, series in sorted(CATALOGUE.items()):
        normal = series.normalize()
        if normal != series or normal.expand(30) != series.expand(30):
            return False, f"{name} changed under normalisation"
    return True, f"{len(CATALOGUE)} series"


CHECKS = [
    ("hilbert.expansion_examples", expansion_examples),
    ("hilbert.stanley_k5", stanley_k5),
    ("hilbert.stanley_k7", stanley_k7),
    ("hilbert.stanley_sanity", stanley_sanity),
    ("hilbert.a_sym_identity", a_sym_identity),
    ("hilbert.a_sym_codimension", a_sym_codimension),
    ("hilbert.a_star_antisymmetric_part", a_star_antisymmetric_part),
    ("hilbert.catalogue_normalises", catalogue_normalises),
]
