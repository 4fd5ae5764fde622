"""Stanley's criteria on Hilbert series numerators: palindromic, product of cyclotomic polynomials."""

import logging

from sympy import Poly, ZZ, cyclotomic_poly

from paramodring.gralg.hilbert import HilbertSeries, t

logger = logging.getLogger(__name__)


def _coeffs(p) -> list[int]:
    if isinstance(p, HilbertSeries):
        return p.numerator_coeffs()
    if isinstance(p, Poly):
        return [int(c) for c in reversed(p.all_coeffs())]
    return [int(c) for c in p]


def palindrome_test(p) -> bool:
    coeffs = _coeffs(p)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs or coeffs[0] == 0:
        raise ValueError("palindrome test needs a polynomial with nonzero constant term")
    return coeffs == coeffs[::-1]


def cyclotomic_product_test(p) -> bool:
    """True iff p is, up to sign, a product of cyclotomic polynomials Phi_n with n <= 2 deg p."""
    coeffs = _coeffs(p)
    if not coeffs or coeffs[0] == 0:
        raise ValueError("cyclotomic test needs a polynomial with nonzero constant term")
    poly = Poly(list(reversed(coeffs)), t, domain=ZZ)
    degree = poly.degree()
    for n in range(1, 2 * degree + 1):
        phi_n = Poly(cyclotomic_poly(n, t), t, domain=ZZ)
        while poly.degree() >= phi_n.degree():
            q, r = poly.div(phi_n)
            if not r.is_zero:
                break
            poly = q
        if poly.degree() == 0:
            break
    remaining = poly.as_expr()
    logger.debug("cyclotomic reduction leaves %s", remaining)
    return poly.degree() == 0 and abs(int(poly.LC())) == 1
