"""Elliptic modular form identities and series ring properties."""

import random
from fractions import Fraction

from paramodring.config import settings
from paramodring.forms.classical import (
    delta, eisenstein, eta_power, gamma2_e1, gamma2_e2, level1_dimension, level1_membership,
)
from paramodring.gralg.graded import dimension_by_rank
from paramodring.gralg.presets import build_preset
from paramodring.series.qexp import QExp

WINDOW = 20


def eisenstein_coefficients():
    e4, e6 = eisenstein(4, WINDOW), eisenstein(6, WINDOW)
    got = (e4.coeff(1), e4.coeff(2), e6.coeff(1))
    return got == (240, 2160, -504), f"E4 q, q^2 and E6 q coefficients are {got}"


def delta_from_eisenstein():
    e4, e6 = eisenstein(4, WINDOW).expansion, eisenstein(6, WINDOW).expansion
    d = (e4 ** 3 - e6 ** 2).scale(Fraction(1, 1728))
    ok = d.agrees_with(delta(WINDOW).expansion)
    return ok, "(E4^3 - E6^2)/1728 differs from eta^24"


def delta_tau():
    d = delta(WINDOW)
    got = [d.coeff(n) for n in (1, 2, 3, 4)]
    return got == [1, -24, 252, -1472], f"tau(1..4) = {got}"


def weight10_membership():
    e10 = (eisenstein(4, WINDOW) * eisenstein(6, WINDOW)).expansion
    coords = level1_membership(e10, 10)
    return coords == [1], f"E4*E6 has coordinates {coords} in weight 10"


def delta_not_eisenstein():
    coords = level1_membership(delta(WINDOW), 12)
    ok = coords is not None and coords[0] == Fraction(1, 1728) and coords[1] == Fraction(-1, 1728)
    return ok, f"Delta has coordinates {coords} in (E4^3, E6^2)"


def level1_dimensions():
    got = [level1_dimension(k) for k in range(0, 27, 2)]
    expected = [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2]
    return got == expected, f"dim M_k(SL2(Z)) for even k <= 26: {got}"


def gamma2_ring():
    gens = build_preset("gamma2", 20)
    got = [dimension_by_rank(gens, k) for k in range(0, 21, 2)]
    expected = [k // 2 + 1 for k in range(0, 21, 2)]
    return got == expected, f"ranks {got}, expected {expected}"


def gamma2_e1_e2():
    e1, e2 = gamma2_e1(WINDOW).expansion, gamma2_e2(WINDOW).expansion
    ok = e1.coeff(0) == 1 and e1.coeff(1) == 24 and e2.coeff(0) == Fraction(1, 2) and e2.coeff(Fraction(1, 2)) == 12
    return ok, f"e1 starts {e1!r}, e2 starts {e2!r}"


def eta_power_grain():
    eta8 = eta_power(8, WINDOW)
    ok = eta8.expansion.grain == 3 and eta8.coeff(Fraction(1, 3)) == 1 and eta8.coeff(Fraction(4, 3)) == -8
    return ok, f"eta^8 is {eta8.expansion!r}"


# --- series ring properties ---

def _random_series(rng: random.Random, grain: int) -> QExp:
    trunc = Fraction(rng.randint(2, 8), rng.choice((1, 2)))
    coeffs = {
        Fraction(k, grain): Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        for k in range(int(trunc * grain))
        if rng.random() < 0.6
    }
    return QExp(coeffs, trunc, grain)


def ring_axioms():
    rng = random.Random(settings.random_seed)
    for i in range(settings.property_instances):
        f, g, h = (_random_series(rng, rng.choice((1, 2))) for _ in range(3))
        if not (f * g).agrees_with(g * f) or (f * g) != (g * f):
            return False, f"instance {i}: multiplication not commutative"
        if (f * g) * h != f * (g * h):
            return False, f"instance {i}: multiplication not associative"
        if f * (g + h) != f * g + f * h:
            return False, f"instance {i}: distributivity fails"
        if f - f != QExp({}, f.trunc, f.grain):
            return False, f"instance {i}: f - f is not zero"
    return True, f"{settings.property_instances} instances"


def truncation_monotonicity():
    rng = random.Random(settings.random_seed + 1)
    for i in range(settings.property_instances):
        f, g = _random_series(rng, 2), _random_series(rng, 1)
        t = Fraction(rng.randint(1, 8), 2)
        lhs = (f * g).truncate(t)
        rhs = f.truncate(t) * g.truncate(t)
        if lhs != rhs:
            return False, f"instance {i}: truncating at {t} does not commute with products"
        if not (f * g).agrees_with(rhs):
            return False, f"instance {i}: truncated product disagrees on its window"
    return True, f"{settings.property_instances} instances"


def division_inverts_product():
    rng = random.Random(settings.random_seed + 2)
    for i in range(settings.property_instances):
        f = _random_series(rng, 1)
        g = _random_series(rng, 1)
        g = g + QExp.constant(1 - g.coeff(0))
        q = (f * g).divide(g)
        if not q.agrees_with(f):
            return False, f"instance {i}: (f*g)/g differs from f"
    return True, f"{settings.property_instances} instances"


CHECKS = [
    ("classical.eisenstein_coefficients", eisenstein_coefficients),
    ("classical.delta_from_eisenstein", delta_from_eisenstein),
    ("classical.delta_tau", delta_tau),
    ("classical.weight10_membership", weight10_membership),
    ("classical.delta_coordinates", delta_not_eisenstein),
    ("classical.level1_dimensions", level1_dimensions),
    ("classical.gamma2_ring", gamma2_ring),
    ("classical.gamma2_e1_e2", gamma2_e1_e2),
    ("classical.eta8_grain", eta_power_grain),
    ("classical.ring_axioms", ring_axioms),
    ("classical.truncation_monotonicity", truncation_monotonicity),
    ("classical.division_inverts_product", division_inverts_product),
]
