"""Expansions sum c(xi) q1^xi q2^xi' indexed by totally nonnegative xi in a real quadratic field."""

from fractions import Fraction

from paramodring.core.quadratic import QuadRational
from paramodring.core.rational import compact, to_rational
from paramodring.errors import DiscriminantMismatch, TruncationError
from paramodring.series.window import as_trunc, tmin


class QuadPairExp:
    """Known for every xi with trace(xi) < trunc (``None``: exact)."""

    __slots__ = ("d", "trunc", "_c")

    def __init__(self, coeffs: dict | None = None, trunc=None, d: int = 5):
        self.d = d
        self.trunc = as_trunc(trunc)
        terms: dict[QuadRational, object] = {}
        for xi, c in (coeffs or {}).items():
            xi = self._check(xi)
            if self._inside(xi):
                terms[xi] = terms.get(xi, 0) + to_rational(c)
        self._c = {k: compact(c) for k, c in terms.items() if c != 0}

    def _check(self, xi) -> QuadRational:
        if isinstance(xi, (int, Fraction)):
            xi = QuadRational(xi, 0, self.d)
        if xi.d != self.d:
            raise DiscriminantMismatch(f"exponent in sqrt({xi.d}) for a sqrt({self.d}) expansion")
        if not xi.is_totally_nonnegative():
            raise ValueError(f"exponent {xi} is not totally nonnegative")
        return xi

    def _inside(self, xi: QuadRational) -> bool:
        return self.trunc is None or xi.trace() < self.trunc

    @classmethod
    def _make(cls, d: int, trunc, terms: dict) -> "QuadPairExp":
        obj = cls.__new__(cls)
        obj.d = d
        obj.trunc = trunc
        obj._c = {k: compact(c) for k, c in terms.items() if c != 0 and obj._inside(k)}
        return obj

    def coeff(self, xi):
        xi = xi if isinstance(xi, QuadRational) else QuadRational(xi, 0, self.d)
        if not self._inside(xi):
            raise TruncationError(f"exponent {xi} has trace at or beyond the window {self.trunc}")
        return self._c.get(xi, 0)

    def __getitem__(self, xi):
        return self.coeff(xi)

    def items(self) -> list[tuple[QuadRational, object]]:
        return sorted(self._c.items(), key=lambda kv: kv[0].sort_key())

    def is_zero(self) -> bool:
        return not self._c

    def _compatible(self, other: "QuadPairExp"):
        if other.d != self.d:
            raise DiscriminantMismatch(f"sqrt({self.d}) expansion mixed with sqrt({other.d})")

    def __add__(self, other):
        if not isinstance(other, QuadPairExp):
            return NotImplemented
        self._compatible(other)
        terms = dict(self._c)
        for k, c in other._c.items():
            terms[k] = terms.get(k, 0) + c
        return QuadPairExp._make(self.d, tmin(self.trunc, other.trunc), terms)

    def __neg__(self):
        return QuadPairExp._make(self.d, self.trunc, {k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, QuadPairExp):
            return NotImplemented
        return self + (-other)

    def scale(self, s) -> "QuadPairExp":
        s = to_rational(s)
        return QuadPairExp._make(self.d, self.trunc, {k: c * s for k, c in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QuadPairExp):
            return NotImplemented
        self._compatible(other)
        trunc = tmin(self.trunc, other.trunc)
        out: dict[QuadRational, object] = {}
        for x, a in self._c.items():
            for y, b in other._c.items():
                z = x + y
                if trunc is None or z.trace() < trunc:
                    out[z] = out.get(z, 0) + a * b
        return QuadPairExp._make(self.d, trunc, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = QuadPairExp({0: 1}, None, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def agrees_with(self, other: "QuadPairExp", upto=None) -> bool:
        self._compatible(other)
        t = tmin(self.trunc, other.trunc, as_trunc(upto))
        keys = {k for k in self._c if t is None or k.trace() < t}
        keys |= {k for k in other._c if t is None or k.trace() < t}
        return all(self._c.get(k, 0) == other._c.get(k, 0) for k in keys)

    def __eq__(self, other):
        if not isinstance(other, QuadPairExp):
            return NotImplemented
        return self.d == other.d and self.trunc == other.trunc and self._c == other._c

    __hash__ = None

    def __repr__(self):
        shown = " + ".join(f"{c}*q^({xi})" for xi, c in self.items()[:4])
        return f"QuadPairExp({shown or '0'} ...; trace < {self.trunc})"
