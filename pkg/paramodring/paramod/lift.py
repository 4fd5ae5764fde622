"""Paramodular Fourier expansions and the Gritsenko lift of Jacobi forms."""

import logging
import math
from fractions import Fraction
from itertools import product

from paramodring.core.rational import compact, format_rational, parse_rational
from paramodring.errors import InsufficientJacobiData, ParamodError, TruncationError
from paramodring.forms.classical import bernoulli, sigma
from paramodring.paramod.jacobi import JacobiFormData

logger = logging.getLogger(__name__)

Index = tuple[int, int, int]


def koecher(a: int, b: int, c: int, N: int) -> bool:
    """(a, b, c) can carry a nonzero coefficient: a, c >= 0 and b^2 <= 4Nac."""
    return a >= 0 and c >= 0 and b * b <= 4 * N * a * c


def koecher_points(N: int, amax: int, cmax: int):
    for a in range(amax + 1):
        for c in range(cmax + 1):
            bmax = math.isqrt(4 * N * a * c)
            for b in range(-bmax, bmax + 1):
                yield a, b, c


class ParamodularSeries:
    """Coefficients alpha(a, b, c) of sum alpha q^a r^b s^(Nc), known on the box a <= Amax, c <= Cmax."""

    def __init__(self, level: int, weight: int, coeffs: dict | None = None, box: tuple[int, int] = (0, 0)):
        self.level = level
        self.weight = weight
        self.box = (int(box[0]), int(box[1]))
        terms: dict[Index, object] = {}
        for (a, b, c), value in (coeffs or {}).items():
            if value == 0:
                continue
            if not koecher(a, b, c, level):
                raise ParamodError(f"coefficient at ({a},{b},{c}) violates the Koecher bound")
            if a > self.box[0] or c > self.box[1]:
                continue
            terms[(a, b, c)] = compact(Fraction(value))
        self._c = terms

    # --- access ---
    def coeff(self, a: int, b: int, c: int):
        if a > self.box[0] or c > self.box[1]:
            raise TruncationError(f"({a},{b},{c}) lies outside the box {self.box}")
        return self._c.get((a, b, c), 0)

    def alpha(self, a: int, b: int, c: int):
        """Coefficient, or None outside the box."""
        if a > self.box[0] or c > self.box[1]:
            return None
        return self._c.get((a, b, c), 0)

    def items(self) -> list[tuple[Index, object]]:
        return sorted(self._c.items(), key=lambda kv: (kv[0][0], kv[0][2], kv[0][1]))

    def is_zero(self) -> bool:
        return not self._c

    def is_symmetric_box(self) -> bool:
        return self.box[0] == self.box[1]

    # --- ring operations ---
    def _compatible(self, other: "ParamodularSeries"):
        if self.level != other.level:
            raise ValueError(f"level {self.level} combined with level {other.level}")

    def _common_box(self, other: "ParamodularSeries") -> tuple[int, int]:
        return min(self.box[0], other.box[0]), min(self.box[1], other.box[1])

    def __add__(self, other: "ParamodularSeries") -> "ParamodularSeries":
        self._compatible(other)
        if self.weight != other.weight:
            raise ValueError(f"cannot add weight {self.weight} to weight {other.weight}")
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return ParamodularSeries(self.level, self.weight, out, self._common_box(other))

    def __neg__(self) -> "ParamodularSeries":
        return self.scale(-1)

    def __sub__(self, other: "ParamodularSeries") -> "ParamodularSeries":
        return self + (-other)

    def scale(self, s) -> "ParamodularSeries":
        return ParamodularSeries(self.level, self.weight, {k: v * s for k, v in self._c.items()}, self.box)

    def __mul__(self, other):
        if not isinstance(other, ParamodularSeries):
            return self.scale(other)
        self._compatible(other)
        box = self._common_box(other)
        N = self.level
        out: dict[Index, object] = {}
        for (a1, b1, c1), x in self._c.items():
            for (a2, b2, c2), y in other._c.items():
                a, c = a1 + a2, c1 + c2
                if a > box[0] or c > box[1]:
                    continue
                key = (a, b1 + b2, c)
                out[key] = out.get(key, 0) + x * y
        for (a, b, c), v in out.items():
            if v != 0 and not koecher(a, b, c, N):
                raise ParamodError(f"product left the Koecher cone at ({a},{b},{c})")
        return ParamodularSeries(N, self.weight + other.weight, out, box)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ParamodularSeries):
            return NotImplemented
        return (self.level, self.weight, self.box, self._c) == (other.level, other.weight, other.box, other._c)

    __hash__ = None

    # --- JSON ---
    def to_json(self) -> dict:
        return {
            "level": self.level,
            "weight": self.weight,
            "box": list(self.box),
            "coeffs": [[a, b, c, format_rational(v)] for (a, b, c), v in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ParamodularSeries":
        coeffs = {(int(a), int(b), int(c)): parse_rational(str(v)) for a, b, c, v in data["coeffs"]}
        return cls(int(data["level"]), int(data["weight"]), coeffs, tuple(data["box"]))

    def __repr__(self):
        return f"ParamodularSeries(level={self.level}, weight={self.weight}, box={self.box}, terms={len(self._c)})"


class LiftCoefficients:
    """Gritsenko lift coefficients computed on demand; None where the Jacobi data runs out."""

    def __init__(self, phi: JacobiFormData):
        if phi.weight < 4:
            raise ValueError(f"the lift needs weight k >= 4, got {phi.weight}")
        self.phi = phi
        self.level = phi.index
        self.weight = phi.weight
        self._cache: dict[Index, object] = {}

    def terms(self, a: int, b: int, c: int) -> list[tuple[int, int, int]]:
        """(d, n, r) with alpha(a,b,c) = sum d^(k-1) c(n, r), for a, c >= 1."""
        g = math.gcd(a, b, c)
        return [(d, a * c // (d * d), b // d) for d in range(1, g + 1) if g % d == 0]

    def missing(self, a: int, b: int, c: int) -> list[tuple[int, int]]:
        if a < 1 or c < 1 or not koecher(a, b, c, self.level):
            return [] if self.phi.coeff(0, 0) is not None else [(0, 0)]
        return [(n, r) for _, n, r in self.terms(a, b, c) if self.phi.coeff(n, r) is None]

    def _boundary(self, a: int, c: int):
        k = self.weight
        if k % 2:
            return 0
        c00 = self.phi.coeff(0, 0)
        if c00 is None:
            return None
        if c00 == 0:
            return 0
        if a == 0 and c == 0:
            return -bernoulli(k) / (2 * k) * c00
        return c00 * sigma(a or c, k - 1)

    def alpha(self, a: int, b: int, c: int):
        if not koecher(a, b, c, self.level):
            return 0
        key = (a, b, c)
        if key in self._cache:
            return self._cache[key]
        if a == 0 or c == 0:
            value = self._boundary(a, c)
        else:
            value = 0
            for d, n, r in self.terms(a, b, c):
                x = self.phi.coeff(n, r)
                if x is None:
                    return None
                value += d ** (self.weight - 1) * x
        if value is not None:
            value = compact(Fraction(value))
        self._cache[key] = value
        return value


class CombinedCoefficients:
    """Rational combination sum s_i * F_i of coefficient providers of one level and weight."""

    def __init__(self, parts: list[tuple[object, object]]):
        if not parts:
            raise ValueError("empty combination")
        self.level = parts[0][1].level
        self.weight = parts[0][1].weight
        for _, p in parts:
            if (p.level, p.weight) != (self.level, self.weight):
                raise ValueError("combined providers must share level and weight")
        self.parts = parts

    def alpha(self, a: int, b: int, c: int):
        total = 0
        for s, p in self.parts:
            x = p.alpha(a, b, c)
            if x is None:
                return None
            total += s * x
        return total


class FrickeCoefficients:
    """alpha'(a, b, c) = alpha(c, -b, a) of any coefficient provider."""

    def __init__(self, source):
        self.source = source
        self.level = source.level
        self.weight = source.weight

    def alpha(self, a: int, b: int, c: int):
        return self.source.alpha(c, -b, a)


def gritsenko_lift(phi: JacobiFormData, amax: int, cmax: int) -> ParamodularSeries:
    """Materialise the lift on the box a <= amax, c <= cmax."""
    provider = LiftCoefficients(phi)
    N = phi.index
    missing: list[tuple[int, int]] = []
    coeffs: dict[Index, object] = {}
    for a, b, c in koecher_points(N, amax, cmax):
        value = provider.alpha(a, b, c)
        if value is None:
            missing.extend(provider.missing(a, b, c))
            continue
        if value:
            coeffs[(a, b, c)] = value
    if missing:
        raise InsufficientJacobiData(missing)
    logger.debug("Lifted %r to box (%d, %d): %d terms", phi, amax, cmax, len(coeffs))
    return ParamodularSeries(N, phi.weight, coeffs, (amax, cmax))


def lift_is_symmetric(F: ParamodularSeries) -> bool:
    """alpha(a, b, c) = alpha(c, b, a) wherever both sides lie in the box."""
    amax, cmax = F.box
    m = min(amax, cmax)
    return all(
        F.coeff(a, b, c) == F.coeff(c, b, a)
        for a, c in product(range(m + 1), repeat=2)
        for b in range(-math.isqrt(4 * F.level * a * c), math.isqrt(4 * F.level * a * c) + 1)
    )
