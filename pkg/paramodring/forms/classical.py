"""Elliptic modular forms on SL2(Z) and Gamma(2) as exact q-expansions."""

import logging
import math
from fractions import Fraction
from functools import lru_cache

from sympy import bernoulli as _sympy_bernoulli
from sympy import divisor_sigma

from paramodring.errors import UndecidedAtTruncation
from paramodring.gralg import linalg
from paramodring.series.qexp import QExp

logger = logging.getLogger(__name__)


class ClassicalForm:
    """A weighted q-expansion with a label; ``quasi`` marks E2 and its relatives."""

    __slots__ = ("weight", "expansion", "label", "quasi")

    def __init__(self, weight, expansion: QExp, label: str = "", quasi: bool = False):
        self.weight = weight
        self.expansion = expansion
        self.label = label
        self.quasi = quasi

    def coeff(self, e):
        return self.expansion.coeff(e)

    def __mul__(self, other):
        if isinstance(other, ClassicalForm):
            return ClassicalForm(
                self.weight + other.weight, self.expansion * other.expansion,
                f"({self.label})*({other.label})", self.quasi or other.quasi,
            )
        return ClassicalForm(self.weight, self.expansion.scale(other), self.label, self.quasi)

    __rmul__ = __mul__

    def _same_weight(self, other: "ClassicalForm"):
        if self.weight != other.weight:
            raise ValueError(f"cannot add weight {self.weight} to weight {other.weight}")

    def __add__(self, other: "ClassicalForm"):
        self._same_weight(other)
        return ClassicalForm(self.weight, self.expansion + other.expansion,
                             f"{self.label}+{other.label}", self.quasi or other.quasi)

    def __sub__(self, other: "ClassicalForm"):
        self._same_weight(other)
        return ClassicalForm(self.weight, self.expansion - other.expansion,
                             f"{self.label}-{other.label}", self.quasi or other.quasi)

    def __pow__(self, n: int):
        return ClassicalForm(self.weight * n, self.expansion ** n, f"({self.label})^{n}", self.quasi)

    def __repr__(self):
        return f"ClassicalForm({self.label!r}, weight={self.weight})"


@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    if not isinstance(k, int) or k < 2 or k % 2:
        raise ValueError(f"Bernoulli numbers are provided for even k >= 2, got {k}")
    b = _sympy_bernoulli(k)
    return Fraction(int(b.p), int(b.q))


def sigma(n: int, k: int) -> int:
    if n < 1:
        raise ValueError(f"divisor sums need n >= 1, got {n}")
    return int(divisor_sigma(n, k))


def _eisenstein_series(k: int, T) -> QExp:
    factor = -Fraction(2 * k) / bernoulli(k)
    n_max = math.ceil(T)
    coeffs = {0: 1}
    coeffs.update({n: factor * sigma(n, k - 1) for n in range(1, n_max)})
    return QExp(coeffs, T)


def eisenstein(k: int, T) -> ClassicalForm:
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for even k >= 4."""
    if k < 4 or k % 2:
        raise ValueError(f"holomorphic Eisenstein series need even k >= 4, got {k}")
    return ClassicalForm(k, _eisenstein_series(k, T), f"E{k}")


def eisenstein2(T) -> ClassicalForm:
    return ClassicalForm(2, _eisenstein_series(2, T), "E2", quasi=True)


def gamma2_e1(T) -> ClassicalForm:
    """2 E2(2 tau) - E2(tau), weight 2 on Gamma0(2)."""
    e2 = _eisenstein_series(2, T)
    return ClassicalForm(2, e2.substitute_scale(2).scale(2) - e2, "e1")


def gamma2_e2(T) -> ClassicalForm:
    """E2(tau) - E2(tau/2)/2, the image of e1 under the Fricke-type swap of Gamma(2) cusps."""
    wide = _eisenstein_series(2, 2 * Fraction(T))
    half = wide.substitute_scale(2, inverse=True)
    return ClassicalForm(2, wide.truncate(T) - half.scale(Fraction(1, 2)), "e2")


def _euler_product(T) -> QExp:
    """prod_{n >= 1} (1 - q^n) below q^T."""
    result = QExp.constant(1, T)
    for n in range(1, math.ceil(T)):
        result = result * QExp({0: 1, n: -1})
    return result


def eta_power(m: int, T) -> ClassicalForm:
    """eta^m = q^{m/24} prod (1 - q^n)^m, grain 24/gcd(m, 24)."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"eta power must be a positive integer, got {m}")
    lead = Fraction(m, 24)
    T = Fraction(T)
    if T <= lead:
        series = QExp({}, T, lead.denominator)
    else:
        series = (_euler_product(T - lead) ** m).shift(lead)
    return ClassicalForm(Fraction(m, 2), series, f"eta^{m}")


def delta(T) -> ClassicalForm:
    form = eta_power(24, T)
    form.label = "Delta"
    return form


def level1_monomials(k: int) -> list[tuple[int, int]]:
    """Exponents (a, b) with 4a + 6b = k, a descending."""
    if k < 0 or k % 2:
        return []
    return [(a, (k - 4 * a) // 6) for a in range(k // 4, -1, -1) if (k - 4 * a) % 6 == 0]


def level1_dimension(k: int) -> int:
    if k < 0 or k % 2 or k == 2:
        return 0
    return k // 12 if k % 12 == 2 else k // 12 + 1


def gamma0_2_dimension(k: int) -> int:
    if k < 0 or k % 2:
        return 0
    return k // 4 + 1


def level1_membership(f, k: int) -> list[Fraction] | None:
    """Coordinates of f in the basis E4^a E6^b (order of ``level1_monomials``), or None if absent."""
    series = f.expansion if isinstance(f, ClassicalForm) else f
    if series.trunc is None:
        raise UndecidedAtTruncation("membership needs a truncated expansion")
    if any(e.denominator != 1 for e, _ in series.items()):
        return None
    monomials = level1_monomials(k)
    slots = math.ceil(series.trunc)
    if slots <= len(monomials):
        raise UndecidedAtTruncation(
            f"weight {k}: {slots} coefficient slots for {len(monomials)} monomials"
        )
    e4 = eisenstein(4, series.trunc).expansion
    e6 = eisenstein(6, series.trunc).expansion
    columns = [e4 ** a * e6 ** b for a, b in monomials]
    rows = [[col.coeff(n) for col in columns] for n in range(slots)]
    rhs = [series.coeff(n) for n in range(slots)]
    if not monomials:
        return [] if all(c == 0 for c in rhs) else None
    coords = linalg.solve(rows, rhs)
    if coords is None:
        logger.debug("weight %d: expansion is not a combination of E4^a E6^b", k)
    return coords
