"""Fricke action and the pullbacks P1, P4, P5, P8 of paramodular expansions.

Every pullback takes either a materialised ``ParamodularSeries`` or an
on-demand coefficient provider (anything with ``level``, ``weight`` and
``alpha(a, b, c)`` returning None for unknown coefficients). A target
coefficient is only reported when every Koecher point of its fibre is known;
the output window is cut back until that holds.
"""

import logging
import math
from fractions import Fraction

from paramodring.config import settings
from paramodring.core.quadratic import QuadRational
from paramodring.errors import LevelError
from paramodring.paramod.jacobi import JacobiFormData
from paramodring.paramod.lift import LiftCoefficients, ParamodularSeries
from paramodring.series.biexp import BiExp
from paramodring.series.quadpair import QuadPairExp

logger = logging.getLogger(__name__)


# --- Fricke involution ---

def fricke_permute(F: ParamodularSeries) -> ParamodularSeries:
    """alpha'(a, b, c) = alpha(c, -b, a); the box must be square."""
    if not F.is_symmetric_box():
        raise ValueError(f"Fricke permutation needs a symmetric box, got {F.box}")
    coeffs = {(c, -b, a): v for (a, b, c), v in F.items()}
    return ParamodularSeries(F.level, F.weight, coeffs, F.box)


def fricke_eigenvalue(F: ParamodularSeries) -> int | None:
    """+1 or -1 when F is a Fricke eigenform on its box, None otherwise."""
    image = fricke_permute(F)
    if image == F:
        return 1
    if image == -F:
        return -1
    return None


# --- diagonal restriction ---

def witt_taylor(F: ParamodularSeries, n: int) -> BiExp:
    """sum_b alpha(a, b, c) b^n at q1^a q2^c; n = 0 is the Witt restriction."""
    if n < 0:
        raise ValueError(f"moment order must be nonnegative, got {n}")
    out: dict[tuple[int, int], object] = {}
    for (a, b, c), v in F.items():
        out[(a, c)] = out.get((a, c), 0) + v * b ** n
    amax, cmax = F.box
    return BiExp(out, (amax + 1, cmax + 1))


def witt_P1(F: ParamodularSeries) -> BiExp:
    return witt_taylor(F, 0)


# --- P4 ---

def _check_odd_level(N: int):
    if N % 2 == 0:
        raise LevelError(f"P4 needs an odd level, got {N}")


def p4_exponent(a: int, b: int, c: int, N: int) -> tuple[Fraction, Fraction]:
    return 2 * a + b + Fraction(N * c, 2), Fraction(c, 2)


def p4_points(N: int, T1, T2):
    """Koecher points (a, b, c) whose P4 exponent lies below (T1, T2)."""
    T1, T2 = Fraction(T1), Fraction(T2)
    c = 0
    while Fraction(c, 2) < T2:
        if c == 0:
            for a in range(math.ceil(T1 / 2)):
                yield a, 0, 0
        else:
            a = 0
            while True:
                bmax = math.isqrt(4 * N * a * c)
                lowest = 2 * a + Fraction(N * c, 2) - bmax
                if 4 * a > N * c and lowest - 1 >= T1:
                    break
                for b in range(-bmax, bmax + 1):
                    if 2 * a + b + Fraction(N * c, 2) >= T1:
                        break
                    yield a, b, c
                a += 1
        c += 1


def staircase_window(bad: list[tuple[Fraction, Fraction]], T1, T2) -> tuple[Fraction, Fraction]:
    """Largest-area rectangle below (T1, T2) avoiding every bad exponent; ties go to the taller one."""
    T1, T2 = Fraction(T1), Fraction(T2)
    if not bad:
        return T1, T2
    best = None
    for t2 in sorted({e2 for _, e2 in bad if e2 < T2} | {T2}):
        t1 = min([T1] + [e1 for e1, e2 in bad if e2 < t2])
        area = t1 * t2
        if best is None or area > best[0] or (area == best[0] and t2 > best[2]):
            best = (area, t1, t2)
    return best[1], best[2]


def _default_p4_window(source) -> tuple[Fraction, Fraction]:
    if isinstance(source, ParamodularSeries):
        amax, cmax = source.box
        return Fraction(2 * amax + 2), Fraction(cmax + 1, 2)
    return Fraction(settings.p4_lift_window), Fraction(1)


def pullback_P4(source, window=None) -> BiExp:
    """Fibre sums over (a, b, c) -> (2a + b + Nc/2, c/2) on the largest trusted window."""
    N = source.level
    _check_odd_level(N)
    T1, T2 = _default_p4_window(source) if window is None else (Fraction(window[0]), Fraction(window[1]))
    sums: dict[tuple[Fraction, Fraction], object] = {}
    bad: list[tuple[Fraction, Fraction]] = []
    for a, b, c in p4_points(N, T1, T2):
        e = p4_exponent(a, b, c, N)
        value = source.alpha(a, b, c)
        if value is None:
            bad.append(e)
        elif value:
            sums[e] = sums.get(e, 0) + value
    t1, t2 = staircase_window(bad, T1, T2)
    if (t1, t2) != (T1, T2):
        logger.debug("P4 window cut from (%s, %s) to (%s, %s)", T1, T2, t1, t2)
    return BiExp(sums, (t1, t2), (2, 2))


def pullback_P4_lift(phi: JacobiFormData, window=None) -> BiExp:
    """P4 of the Gritsenko lift of phi, read straight from the Jacobi coefficients."""
    _check_odd_level(phi.index)
    return pullback_P4(LiftCoefficients(phi), window)


# --- Hilbert modular pullbacks ---

def _p5_exponent(a: int, b: int, c: int) -> QuadRational:
    return QuadRational(a + Fraction(b, 2) + Fraction(3 * c, 2), -Fraction(b + 5 * c, 10), 5)


def _p8_exponent(a: int, b: int, c: int) -> QuadRational:
    return QuadRational(a + Fraction(b, 2) + 2 * c, Fraction(2 * c - a, 4), 2)


# level -> (exponent map, discriminant, c-weight in the trace, bound on (a + c) / trace)
_HILBERT_TARGETS = {
    5: (_p5_exponent, 5, 3, 5),
    7: (_p8_exponent, 2, 4, 6),
}


def trace_points(N: int, c_weight: int, spread: int, T):
    """Koecher points with trace 2a + b + c_weight*c below T; a + c never exceeds spread * trace."""
    T = Fraction(T)
    for s in range(math.ceil(spread * T)):
        for a in range(s + 1):
            c = s - a
            bmax = math.isqrt(4 * N * a * c)
            for b in range(-bmax, bmax + 1):
                if 2 * a + b + c_weight * c >= T:
                    break
                yield a, b, c


def _pullback_quadratic(source, level: int, trunc) -> QuadPairExp:
    if source.level != level:
        raise LevelError(f"this pullback is defined at level {level}, got {source.level}")
    exponent, d, c_weight, spread = _HILBERT_TARGETS[level]
    if trunc is None:
        if isinstance(source, ParamodularSeries):
            trunc = Fraction(2 * max(source.box) + 2)
        else:
            trunc = Fraction(settings.p4_lift_window)
    T = Fraction(trunc)
    sums: dict[QuadRational, object] = {}
    effective = T
    for a, b, c in trace_points(level, c_weight, spread, T):
        xi = exponent(a, b, c)
        value = source.alpha(a, b, c)
        if value is None:
            effective = min(effective, xi.trace())
        elif value:
            sums[xi] = sums.get(xi, 0) + value
    if effective != T:
        logger.debug("level-%d pullback window cut from trace %s to %s", level, T, effective)
    return QuadPairExp(sums, effective, d)


def pullback_P5(source, trunc=None) -> QuadPairExp:
    """Level 5 onto Q(sqrt5): xi = a + b/2 + 3c/2 - ((b + 5c)/10) sqrt5."""
    return _pullback_quadratic(source, 5, trunc)


def pullback_P8(source, trunc=None) -> QuadPairExp:
    """Level 7 onto Q(sqrt2): xi = (a + b/2 + 2c) + ((2c - a)/4) sqrt2."""
    return _pullback_quadratic(source, 7, trunc)
