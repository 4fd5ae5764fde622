"""Elements a + b*sqrt(D) of a real quadratic field, D squarefree and carried as data."""

import re
from fractions import Fraction
from functools import lru_cache

from sympy import factorint

from paramodring.core.rational import format_rational, parse_rational, to_rational
from paramodring.errors import DiscriminantMismatch

_QUAD_RE = re.compile(
    r"^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*$"
)


@lru_cache(maxsize=None)
def _check_squarefree(d: int):
    if d < 2 or any(e > 1 for e in factorint(d).values()):
        raise ValueError(f"discriminant parameter must be a squarefree integer > 1, got {d}")


class QuadRational:
    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 5):
        _check_squarefree(d)
        self.a = to_rational(a)
        self.b = to_rational(b)
        self.d = d

    # --- coercion ---
    def _coerce(self, other) -> "QuadRational":
        if isinstance(other, QuadRational):
            if other.d != self.d:
                raise DiscriminantMismatch(f"sqrt({self.d}) mixed with sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadRational(other, 0, self.d)
        return NotImplemented

    # --- field operations ---
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRational(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadRational(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRational(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadRational(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        return QuadRational(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        result = QuadRational(1, 0, self.d)
        for _ in range(abs(e)):
            result = result * base
        return result

    # --- invariants ---
    def conjugate(self) -> "QuadRational":
        return QuadRational(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def trace(self) -> Fraction:
        return 2 * self.a

    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_positive(self) -> bool:
        a, b = self.a, self.b
        if b == 0:
            return a > 0
        if a >= 0 and b > 0:
            return True
        if a <= 0 and b < 0:
            return False
        # opposite signs: compare a^2 with b^2 * D
        if a > 0:
            return a * a > b * b * self.d
        return b * b * self.d > a * a

    def is_totally_nonnegative(self) -> bool:
        return not (-self).is_positive() and not (-self.conjugate()).is_positive()

    # --- comparison ---
    def __eq__(self, other):
        if isinstance(other, QuadRational):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (o - self).is_positive()

    def __le__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return not (self - o).is_positive()

    def __gt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).is_positive()

    def __ge__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return not (o - self).is_positive()

    def sort_key(self) -> tuple[Fraction, Fraction]:
        """Deterministic total order used for serialisation (trace, then surd part)."""
        return (self.trace(), self.b)

    # --- text ---
    def __str__(self):
        sign = "-" if self.b < 0 else "+"
        return f"{format_rational(self.a)}{sign}{format_rational(abs(self.b))}*sqrt({self.d})"

    def __repr__(self):
        return f"QuadRational({self})"

    @classmethod
    def parse(cls, text: str) -> "QuadRational":
        m = _QUAD_RE.match(text)
        if not m:
            raise ValueError(f"not a quadratic literal: {text!r}")
        b = parse_rational(m.group(3))
        if m.group(2) == "-":
            b = -b
        return cls(parse_rational(m.group(1)), b, int(m.group(4)))


def quad_conjugate(x: QuadRational) -> QuadRational:
    return x.conjugate()


def quad_is_positive(x: QuadRational) -> bool:
    return x.is_positive()
