"""Degenerate Hilbert modular forms on Gamma0(2) x Gamma0(2) twisted by the swap, as double q-expansions."""

import logging
from fractions import Fraction
from functools import lru_cache

from paramodring.forms.classical import eta_power, gamma2_e1, gamma2_e2, level1_membership
from paramodring.series.biexp import BiExp
from paramodring.series.qexp import QExp

logger = logging.getLogger(__name__)

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
MIXED = "mixed"

# X8^2 = sum of c * X2^a X4^b Delta6^d over the entries below, keys are (a, b, d).
RELATION_R = {
    (4, 2, 0): 1,
    (2, 3, 0): -128,
    (0, 4, 0): 4096,
    (3, 1, 1): 4,
    (1, 2, 1): -2304,
    (0, 1, 2): -6912,
}


def detect_symmetry(x: BiExp) -> str:
    swapped = x.swap()
    if swapped.agrees_with(x):
        return SYMMETRIC
    if swapped.agrees_with(-x):
        return ANTISYMMETRIC
    return MIXED


def symmetrize(x: BiExp) -> BiExp:
    """(x + swap x) / 2."""
    return (x + x.swap()).scale(Fraction(1, 2))


def antisymmetrize(x: BiExp) -> BiExp:
    return (x - x.swap()).scale(Fraction(1, 2))


def _product_symmetry(a: str, b: str) -> str:
    if MIXED in (a, b):
        return MIXED
    return SYMMETRIC if a == b else ANTISYMMETRIC


class GForm:
    """Weighted double expansion with its swap symmetry checked on construction."""

    __slots__ = ("weight", "expansion", "symmetry", "label")

    def __init__(self, weight: int, expansion: BiExp, label: str = "", symmetry: str | None = None):
        found = detect_symmetry(expansion)
        if symmetry is not None and symmetry != found and not expansion.is_zero():
            raise ValueError(f"{label or 'form'} claimed {symmetry} but is {found}")
        self.weight = weight
        self.expansion = expansion
        self.symmetry = found
        self.label = label

    def coeff(self, e1, e2):
        return self.expansion.coeff(e1, e2)

    def __mul__(self, other):
        if isinstance(other, GForm):
            return GForm(
                self.weight + other.weight,
                self.expansion * other.expansion,
                f"{self.label}*{other.label}",
                _product_symmetry(self.symmetry, other.symmetry),
            )
        return GForm(self.weight, self.expansion.scale(other), self.label, self.symmetry)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        sym = self.symmetry if n % 2 else (MIXED if self.symmetry == MIXED else SYMMETRIC)
        return GForm(self.weight * n, self.expansion ** n, f"{self.label}^{n}", sym)

    def _check_weight(self, other: "GForm"):
        if self.weight != other.weight:
            raise ValueError(f"cannot add weight {self.weight} to weight {other.weight}")

    def __add__(self, other: "GForm"):
        self._check_weight(other)
        return GForm(self.weight, self.expansion + other.expansion, f"{self.label}+{other.label}")

    def __sub__(self, other: "GForm"):
        self._check_weight(other)
        return GForm(self.weight, self.expansion - other.expansion, f"{self.label}-{other.label}")

    def __neg__(self):
        return GForm(self.weight, -self.expansion, f"-{self.label}", self.symmetry)

    def relabel(self, label: str) -> "GForm":
        return GForm(self.weight, self.expansion, label, self.symmetry)

    def __repr__(self):
        return f"GForm({self.label!r}, weight={self.weight}, {self.symmetry})"


@lru_cache(maxsize=16)
def _e(i: int, T) -> QExp:
    if i == 1:
        return gamma2_e1(T).expansion
    if i == 2:
        return gamma2_e2(T).expansion
    raise ValueError(f"e_i is defined for i in (1, 2), got {i}")


def f(i: int, j: int, T) -> GForm:
    """f_ij = e_i(tau1) e_j(tau2)."""
    T = Fraction(T)
    expansion = BiExp.tensor(_e(i, T), _e(j, T)).with_grains((2, 2))
    return GForm(2, expansion, f"f{i}{j}")


@lru_cache(maxsize=8)
def X2(T) -> GForm:
    f11, f12, f21, f22 = f(1, 1, T), f(1, 2, T), f(2, 1, T), f(2, 2, T)
    x = (f11 + f22) * Fraction(4, 3) - (f12 + f21) * Fraction(2, 3)
    return x.relabel("X2")


@lru_cache(maxsize=8)
def X4(T) -> GForm:
    d = f(1, 2, T) - f(2, 1, T)
    return (d * d * Fraction(1, 144)).relabel("X4")


@lru_cache(maxsize=8)
def Delta6(T) -> GForm:
    eta12 = eta_power(12, T).expansion
    return GForm(6, BiExp.tensor(eta12, eta12).with_grains((2, 2)), "Delta6")


@lru_cache(maxsize=8)
def Delta6_from_f(T) -> GForm:
    f11, f12, f21, f22 = f(1, 1, T), f(1, 2, T), f(2, 1, T), f(2, 2, T)
    a = f11 + f12 + f21 + f22
    b = f11 - (f12 + f21) * 2 + f22 * 4
    c = f11 * 4 - (f12 + f21) * 2 + f22
    return (a * b * c * Fraction(1, 2916)).relabel("Delta6")


@lru_cache(maxsize=8)
def X8(T) -> GForm:
    f11, f12, f21, f22 = f(1, 1, T), f(1, 2, T), f(2, 1, T), f(2, 2, T)
    s = f12 + f21
    x = (f11 - f22) * (f12 - f21) * (s - f11) * (s - f22) * Fraction(1, 81)
    return x.relabel("X8")


def phi(which: int, x) -> QExp:
    """Boundary slice: q1^0 row (which=1, series in tau2) or q2^0 column (which=2)."""
    expansion = x.expansion if isinstance(x, GForm) else x
    return expansion.slice(which, 0)


def diagonal_restriction(x) -> QExp:
    expansion = x.expansion if isinstance(x, GForm) else x
    return expansion.diagonal()


def relation_R_residual(T, coefficients: dict | None = None) -> BiExp:
    """X8^2 minus the right-hand side of the quadratic relation, expanded to (T, T)."""
    coefficients = RELATION_R if coefficients is None else coefficients
    x2, x4, d6, x8 = X2(T).expansion, X4(T).expansion, Delta6(T).expansion, X8(T).expansion
    rhs = BiExp({}, x8.trunc, (2, 2))
    for (a, b, d), c in coefficients.items():
        rhs = rhs + (x2 ** a * x4 ** b * d6 ** d).scale(c)
    return x8 * x8 - rhs


def a_star_generators(T) -> list[GForm]:
    """Five symmetric generators of the symmetric part, then three antisymmetric module generators."""
    x2, x4, d6, x8 = X2(T), X4(T), Delta6(T), X8(T)
    return [
        (x2 * x2 - x4 * 48).relabel("X2^2-48X4"),
        (x2 * x2 * x2 - x2 * x4 * 72).relabel("X2^3-72X2X4"),
        d6,
        (x2 * d6).relabel("X2*Delta6"),
        (x4 * d6).relabel("X4*Delta6"),
        (x4 * x8).relabel("X4*X8"),
        (d6 * x8).relabel("Delta6*X8"),
        (x2 * d6 * x8).relabel("X2*Delta6*X8"),
    ]


def rescaled_boundary(which: int, x) -> QExp:
    """phi_which(x) at tau/2."""
    return phi(which, x).substitute_scale(2, inverse=True)


def a_star_membership(x: GForm) -> bool:
    """Both boundary slices at tau/2 are level-one modular forms of the same weight."""
    for which in (1, 2):
        coords = level1_membership(rescaled_boundary(which, x), x.weight)
        if coords is None:
            logger.debug("%s: boundary %d is not of level one", x.label, which)
            return False
    return True
