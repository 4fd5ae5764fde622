"""Jacobi Eisenstein series of index N and the normalised paramodular Eisenstein lift."""

import logging
import math
from fractions import Fraction
from functools import lru_cache

from sympy import factorint, jacobi_symbol, mobius

from paramodring.errors import EisensteinValidationError
from paramodring.forms.classical import bernoulli, sigma
from paramodring.paramod.jacobi import JacobiFormData
from paramodring.paramod.lift import CombinedCoefficients, LiftCoefficients, gritsenko_lift, ParamodularSeries

logger = logging.getLogger(__name__)


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for n >= 1."""
    if n < 1:
        raise ValueError(f"kronecker symbol needs n >= 1, got {n}")
    e = (n & -n).bit_length() - 1
    m = n >> e
    result = 1
    if e:
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5) and e % 2:
            result = -1
    if m > 1:
        result *= int(jacobi_symbol(D % m, m))
    return result


def fundamental_discriminant(D: int) -> tuple[int, int]:
    """Write a negative discriminant D as D0 * f^2 with D0 fundamental."""
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"expected a negative discriminant, got {D}")
    core = -math.prod(p for p, e in factorint(-D).items() if e % 2)
    d0 = core if core % 4 == 1 else 4 * core
    return d0, math.isqrt(D // d0)


def _bernoulli_number(j: int) -> Fraction:
    if j == 0:
        return Fraction(1)
    if j == 1:
        return Fraction(-1, 2)
    if j % 2:
        return Fraction(0)
    return bernoulli(j)


@lru_cache(maxsize=None)
def _bernoulli_poly(r: int) -> tuple[Fraction, ...]:
    """Coefficients of B_r(x), constant term first."""
    return tuple(math.comb(r, r - i) * _bernoulli_number(r - i) for i in range(r + 1))


def generalized_bernoulli(r: int, d0: int) -> Fraction:
    """B_{r, chi} for the quadratic character chi = (d0/.) of conductor |d0|."""
    F = abs(d0)
    poly = _bernoulli_poly(r)
    total = Fraction(0)
    for a in range(1, F + 1):
        chi = kronecker(d0, a)
        if chi:
            x = Fraction(a, F)
            total += chi * sum(c * x ** i for i, c in enumerate(poly))
    return F ** (r - 1) * total


@lru_cache(maxsize=None)
def cohen_h(r: int, n: int) -> Fraction:
    """Cohen's function H(r, n): zeta(1 - 2r) at n = 0, class-number style L-values otherwise."""
    if n == 0:
        return -bernoulli(2 * r) / (2 * r)
    if n < 0 or n % 4 in (1, 2):
        return Fraction(0)
    d0, f = fundamental_discriminant(-n)
    l_value = -generalized_bernoulli(r, d0) / r
    total = 0
    for d in range(1, f + 1):
        if f % d == 0:
            mu = int(mobius(d))
            if mu:
                total += mu * kronecker(d0, d) * d ** (r - 1) * sigma(f // d, 2 * r - 1)
    return l_value * total


def _index_one(k: int, n: int, r: int) -> Fraction:
    return cohen_h(k - 1, 4 * n - r * r) / cohen_h(k - 1, 0)


def _check_weight(k: int):
    if k < 4 or k % 2:
        raise ValueError(f"Jacobi Eisenstein series need even k >= 4, got {k}")


def jacobi_eisenstein_coefficient(k: int, N: int, n: int, r: int) -> Fraction:
    """c(n, r) of E_{k,N} = (E_{k,1} | V_N) / sigma_{k-1}(N)."""
    _check_weight(k)
    if n < 0 or r * r > 4 * N * n:
        return Fraction(0)
    g = math.gcd(n, r, N)
    total = Fraction(0)
    for a in range(1, g + 1):
        if g % a == 0:
            total += a ** (k - 1) * _index_one(k, n * N // (a * a), r // a)
    return total / sigma(N, k - 1)


def jacobi_eisenstein(k: int, N: int, max_n: int) -> JacobiFormData:
    """Materialised table of E_{k,N} for n <= max_n; ingestion re-checks periodicity."""
    entries = [
        (n, r, jacobi_eisenstein_coefficient(k, N, n, r))
        for n in range(max_n + 1)
        for r in range(math.isqrt(4 * N * n) + 1)
    ]
    return JacobiFormData.from_entries(
        k, N, [e for e in entries if e[2]], max_n, f"E_{{{k},{N}}} computed via Cohen H"
    )


def jacobi_eisenstein_exact(k: int, N: int) -> JacobiFormData:
    _check_weight(k)
    return JacobiFormData.from_function(
        k, N, lambda n, r: jacobi_eisenstein_coefficient(k, N, n, r), f"E_{{{k},{N}}} on demand"
    )


def normalising_factor(k: int) -> Fraction:
    return -Fraction(2 * k) / bernoulli(k)


def eisenstein_coefficients(k: int, N: int) -> CombinedCoefficients:
    """Normalised Eisenstein lift with every coefficient available."""
    return CombinedCoefficients([(normalising_factor(k), LiftCoefficients(jacobi_eisenstein_exact(k, N)))])


def eisenstein_paramodular(k: int, N: int, amax: int, cmax: int,
                           data: JacobiFormData | None = None) -> ParamodularSeries:
    """-(2k/B_k) times the lift of E_{k,N}, checked against E_k on its constant term and alpha(1,0,0)."""
    _check_weight(k)
    phi = data if data is not None else jacobi_eisenstein_exact(k, N)
    if (phi.weight, phi.index) != (k, N):
        raise EisensteinValidationError(
            f"table has weight {phi.weight} index {phi.index}, expected {k} and {N}"
        )
    factor = normalising_factor(k)
    F = gritsenko_lift(phi, amax, cmax).scale(factor)
    if F.coeff(0, 0, 0) != 1:
        raise EisensteinValidationError(f"constant term is {F.coeff(0, 0, 0)}, expected 1")
    if amax >= 1 and F.coeff(1, 0, 0) != factor:
        raise EisensteinValidationError(
            f"alpha(1,0,0) is {F.coeff(1, 0, 0)}, E_{k} has {factor}"
        )
    logger.info("Eisenstein lift of weight %d, level %d validated on box (%d, %d)", k, N, amax, cmax)
    return F
