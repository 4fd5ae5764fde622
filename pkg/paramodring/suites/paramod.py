"""Jacobi tables, Gritsenko lifts, Eisenstein lifts and the pullbacks onto Hilbert modular surfaces."""

import random
import tempfile
from fractions import Fraction
from pathlib import Path

from paramodring.config import settings
from paramodring.core.quadratic import QuadRational
from paramodring.forms import deghilb
from paramodring.paramod.eisenstein import eisenstein_coefficients, eisenstein_paramodular
from paramodring.paramod.jacobi import parse_jacobi
from paramodring.paramod.lift import (
    FrickeCoefficients, LiftCoefficients, ParamodularSeries, gritsenko_lift, koecher,
    koecher_points, lift_is_symmetric,
)
from paramodring.paramod.pullback import (
    fricke_eigenvalue, pullback_P4, pullback_P4_lift, pullback_P5, pullback_P8, witt_taylor,
)
from paramodring.paramod.tables import SHIPPED, load_table

HALF = Fraction(1, 2)
ROW_POINTS = ((HALF, HALF), (Fraction(3, 2), HALF))

# P4 of the normalised Eisenstein lifts at (1/2, 1/2) and (3/2, 1/2)
EISENSTEIN_ROWS = {
    (4, 5): (480, 13440),
    (4, 7): (480, 13440),
    (6, 5): (Fraction(55440, 521), Fraction(16140096, 521)),
    (6, 7): (Fraction(25200, 191), Fraction(5858496, 191)),
}

# Delta6 coefficient in P4 E6 = X2^3 - 72 X2 X4 - c Delta6
EISENSTEIN_DELTA6 = {5: Fraction(319680, 521), 7: Fraction(112320, 191)}

# P4 rows of the lifts of the shipped generators
LIFT_ROWS = {
    (5, "g6"): (2, -24),
    (5, "g8"): (2, 24),
    (5, "g10"): (0, 16),
    (7, "g6"): (0, 0),
    (7, "g8"): (1, 12),
    (7, "g10"): (0, -2),
}


def _window() -> Fraction:
    return Fraction(settings.p4_lift_window)


def _rows(x) -> tuple:
    return tuple(x.coeff(*p) for p in ROW_POINTS)


def _lift_targets(T) -> dict:
    x2, x4, d6 = deghilb.X2(T), deghilb.X4(T), deghilb.Delta6(T)
    return {
        (5, "g6"): (d6 * 2).expansion,
        (5, "g8"): (x2 * d6 * 2).expansion,
        (5, "g10"): (x4 * d6 * 16).expansion,
        (7, "g8"): (x2 * d6).expansion,
        (7, "g10"): (x4 * d6 * -2).expansion,
    }


def _shipped():
    for level, names in sorted(SHIPPED.items()):
        for name in names:
            yield level, name, load_table(level, name)


def parse_examples():
    g6 = load_table(5, "g6")
    got = (g6.coeff(1, 4), g6.coeff(1, 3), g6.coeff(1, 0), g6.coeff(1, -4))
    if got != (1, -2, -50, 1):
        return False, f"level-5 g6 c(1,4), c(1,3), c(1,0), c(1,-4) = {got}"
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "zero.jf"
        path.write_text("weight 6\nindex 5\nsource empty body\n")
        zero = parse_jacobi(path)
    return zero.is_zero() and zero.coeff(3, 2) == 0, f"empty body parsed to {zero!r}"


def lift_examples():
    F = gritsenko_lift(load_table(5, "g6"), 2, 1)
    got = (F.coeff(1, 4, 1), F.coeff(1, 0, 0), F.coeff(0, 0, 0), F.coeff(2, 6, 1))
    return got == (1, 0, 0, 1), f"alpha(1,4,1), alpha(1,0,0), alpha(0,0,0), alpha(2,6,1) = {got}"


def lift_symmetry():
    for level, name, phi in _shipped():
        if not lift_is_symmetric(gritsenko_lift(phi, 1, 1)):
            return False, f"lift of level-{level} {name} is not symmetric"
    for k, N, m in ((4, 5, 3), (6, 7, 2)):
        if not lift_is_symmetric(eisenstein_paramodular(k, N, m, m)):
            return False, f"Eisenstein lift of weight {k}, level {N} is not symmetric"
    return True, ""


def fricke_sign_of_lifts():
    for level, name, phi in _shipped():
        eps = fricke_eigenvalue(gritsenko_lift(phi, 1, 1))
        if eps != (-1) ** phi.weight:
            return False, f"level-{level} {name}: Fricke eigenvalue {eps}, weight {phi.weight}"
    return True, ""


def witt_moments():
    F = gritsenko_lift(load_table(5, "g7"), 1, 1)
    got = [witt_taylor(F, n).coeff(1, 1) for n in (1, 3, 5)]
    p1 = witt_taylor(gritsenko_lift(load_table(5, "g6"), 1, 1), 0).coeff(1, 1)
    return got == [0, 0, -2880] and p1 == 0, f"level-5 g7 moments {got}, level-5 g6 P1 at (1,1) = {p1}"


def p4_lift_rows():
    for (level, name), expected in sorted(LIFT_ROWS.items()):
        got = _rows(pullback_P4_lift(load_table(level, name)))
        if got != expected:
            return False, f"level-{level} {name}: rows {got}, expected {expected}"
    return True, ""


def p4_lift_identities():
    targets = _lift_targets(_window())
    for (level, name), target in sorted(targets.items()):
        if not pullback_P4_lift(load_table(level, name)).agrees_with(target):
            return False, f"P4 of the level-{level} {name} lift differs from its target"
    if not pullback_P4_lift(load_table(7, "g6")).is_zero():
        return False, "P4 of the level-7 g6 lift is not zero"
    return True, ""


def p4_lift_matches_series():
    for level, name, phi in _shipped():
        direct = pullback_P4_lift(phi)
        materialised = pullback_P4(gritsenko_lift(phi, 2, 1))
        if not direct.agrees_with(materialised):
            return False, f"level-{level} {name}: P4 of the lift differs from P4 of the series"
    return True, ""


def p4_fibres():
    F = gritsenko_lift(load_table(5, "g6"), 2, 1)
    x = pullback_P4(F, (1, 1))
    expected = F.coeff(1, -4, 1) + F.coeff(2, -6, 1)
    if x.coeff(HALF, HALF) != expected:
        return False, f"level 5 at (1/2,1/2) is {x.coeff(HALF, HALF)}, fibre sum {expected}"
    E = eisenstein_paramodular(4, 7, 3, 1)
    y = pullback_P4(E, (1, 1))
    expected = E.coeff(1, -5, 1) + E.coeff(2, -7, 1) + E.coeff(3, -9, 1)
    if y.coeff(HALF, HALF) != expected:
        return False, f"level 7 at (1/2,1/2) is {y.coeff(HALF, HALF)}, fibre sum {expected}"
    boundary = pullback_P4(E, (4, HALF))
    row = [boundary.coeff(2 * a, 0) for a in range(2)]
    return row == [E.coeff(a, 0, 0) for a in range(2)], f"constant row {row}"


def odd_weight_p4_vanishes():
    for level, name in ((5, "g7"), (7, "g5"), (7, "g7")):
        if not pullback_P4_lift(load_table(level, name)).is_zero():
            return False, f"P4 of the level-{level} {name} lift is not zero"
    return True, ""


def p5_p8_coefficients():
    g6 = load_table(5, "g6")
    x = pullback_P5(LiftCoefficients(g6), 2).coeff(QuadRational(HALF, Fraction(-1, 10), 5))
    if x != g6.coeff(1, -4):
        return False, f"P5 of the level-5 g6 lift at 1/2 - sqrt5/10 is {x}"
    g5 = load_table(7, "g5")
    y = pullback_P8(LiftCoefficients(g5), 2).coeff(QuadRational(HALF, Fraction(1, 4), 2))
    return y == g5.coeff(1, -5) == 1, f"P8 of the level-7 g5 lift at 1/2 + sqrt2/4 is {y}"


def eisenstein_validation():
    e4 = eisenstein_paramodular(4, 5, 1, 1)
    e6 = eisenstein_paramodular(6, 5, 1, 1)
    got = (e4.coeff(0, 0, 0), e4.coeff(1, 0, 0), e6.coeff(1, 0, 0))
    return got == (1, 240, -504), f"constant, E4 and E6 alpha(1,0,0): {got}"


def eisenstein_p4_rows():
    for (k, N), expected in sorted(EISENSTEIN_ROWS.items()):
        got = _rows(pullback_P4(eisenstein_coefficients(k, N)))
        if got != expected:
            return False, f"weight {k}, level {N}: rows {got}, expected {expected}"
    return True, ""


def eisenstein_p4_identities():
    T = _window()
    x2, x4, d6 = deghilb.X2(T).expansion, deghilb.X4(T).expansion, deghilb.Delta6(T).expansion
    e4_target = x2 * x2 - x4.scale(48)
    for N, c in sorted(EISENSTEIN_DELTA6.items()):
        if not pullback_P4(eisenstein_coefficients(4, N)).agrees_with(e4_target):
            return False, f"P4 E4 at level {N} differs from X2^2 - 48 X4"
        e6_target = x2 * x2 * x2 - (x2 * x4).scale(72) - d6.scale(c)
        if not pullback_P4(eisenstein_coefficients(6, N)).agrees_with(e6_target):
            return False, f"P4 E6 at level {N} differs from X2^3 - 72 X2 X4 - {c} Delta6"
    return True, ""


def fricke_p4_compatibility():
    providers = [LiftCoefficients(load_table(level, name)) for level, name in ((5, "g6"), (7, "g8"))]
    providers.append(eisenstein_coefficients(4, 5))
    for p in providers:
        swapped = pullback_P4(p).swap()
        if not pullback_P4(FrickeCoefficients(p)).agrees_with(swapped):
            return False, f"level {p.level} weight {p.weight}: P4 of the Fricke image is not the swap"
    return True, ""


def _random_series(rng: random.Random, N: int) -> ParamodularSeries:
    m = rng.randint(1, 2)
    coeffs = {
        p: Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        for p in koecher_points(N, m, m)
        if rng.random() < 0.4
    }
    return ParamodularSeries(N, rng.randint(4, 8), coeffs, (m, m))


def koecher_closure():
    rng = random.Random(settings.random_seed + 3)
    for i in range(settings.property_instances):
        N = rng.choice((5, 7))
        F, G = _random_series(rng, N), _random_series(rng, N)
        H = F * G
        if H.weight != F.weight + G.weight or not all(koecher(a, b, c, N) for (a, b, c), _ in H.items()):
            return False, f"instance {i}: product leaves the Koecher cone"
        if H != G * F:
            return False, f"instance {i}: product is not commutative"
    return True, f"{settings.property_instances} instances"


CHECKS = [
    ("paramod.parse_examples", parse_examples),
    ("paramod.lift_examples", lift_examples),
    ("paramod.lift_symmetry", lift_symmetry),
    ("paramod.fricke_sign", fricke_sign_of_lifts),
    ("paramod.witt_moments", witt_moments),
    ("paramod.p4_lift_rows", p4_lift_rows),
    ("paramod.p4_lift_identities", p4_lift_identities),
    ("paramod.p4_lift_matches_series", p4_lift_matches_series),
    ("paramod.p4_fibres", p4_fibres),
    ("paramod.odd_weight_p4", odd_weight_p4_vanishes),
    ("paramod.p5_p8_coefficients", p5_p8_coefficients),
    ("paramod.eisenstein_validation", eisenstein_validation),
    ("paramod.eisenstein_p4_rows", eisenstein_p4_rows),
    ("paramod.eisenstein_p4_identities", eisenstein_p4_identities),
    ("paramod.fricke_p4_compatibility", fricke_p4_compatibility),
    ("paramod.koecher_closure", koecher_closure),
]
