"""Truncated q-expansions in one variable with rational exponents on a fixed grain."""

from fractions import Fraction

from paramodring.core.rational import compact, to_rational
from paramodring.errors import GrainError, SeriesDivisionError, TruncationError
from paramodring.series.window import (
    as_trunc, below, key_bound, lcm, tmin, tscale, tshift,
)


def _clean(terms: dict) -> dict:
    return {k: compact(c) for k, c in terms.items() if c != 0}


class QExp:
    """Sum of c_e q^e for e = k/grain, known for e < trunc (``trunc=None``: exact).

    Coefficients are stored under the integer key k = e*grain.
    """

    __slots__ = ("grain", "trunc", "_c")

    def __init__(self, coeffs: dict | None = None, trunc=None, grain: int = 1):
        if grain < 1:
            raise GrainError(f"grain must be a positive integer, got {grain}")
        self.grain = grain
        self.trunc = as_trunc(trunc)
        bound = key_bound(self.trunc, grain)
        terms: dict[int, object] = {}
        for e, c in (coeffs or {}).items():
            k = to_rational(e) * grain
            if k.denominator != 1:
                raise GrainError(f"exponent {e} is not a multiple of 1/{grain}")
            k = k.numerator
            if k < 0:
                raise ValueError(f"negative exponent {e} in a q-expansion")
            if below(k, bound):
                terms[k] = terms.get(k, 0) + to_rational(c)
        self._c = _clean(terms)

    @classmethod
    def _make(cls, grain: int, trunc, terms: dict) -> "QExp":
        obj = cls.__new__(cls)
        obj.grain = grain
        obj.trunc = trunc
        bound = key_bound(trunc, grain)
        obj._c = _clean({k: c for k, c in terms.items() if below(k, bound)})
        return obj

    @classmethod
    def constant(cls, c, trunc=None) -> "QExp":
        return cls({0: c}, trunc)

    @classmethod
    def monomial(cls, e, c=1, trunc=None, grain: int | None = None) -> "QExp":
        e = to_rational(e)
        return cls({e: c}, trunc, grain or e.denominator)

    # --- access ---
    def coeff(self, e):
        e = to_rational(e)
        if self.trunc is not None and e >= self.trunc:
            raise TruncationError(f"q^{e} requested, expansion known below q^{self.trunc}")
        k = e * self.grain
        if k.denominator != 1:
            return 0
        return self._c.get(k.numerator, 0)

    def __getitem__(self, e):
        return self.coeff(e)

    def items(self) -> list[tuple[Fraction, object]]:
        return [(Fraction(k, self.grain), c) for k, c in sorted(self._c.items())]

    def as_dict(self) -> dict:
        return dict(self.items())

    def keys(self) -> list[int]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def valuation(self):
        """Smallest exponent with nonzero coefficient; ``trunc`` for a zero expansion."""
        if not self._c:
            return self.trunc
        return Fraction(min(self._c), self.grain)

    def leading(self) -> tuple[Fraction, object]:
        if not self._c:
            raise SeriesDivisionError("expansion vanishes on its window")
        k = min(self._c)
        return Fraction(k, self.grain), self._c[k]

    def slot_exponents(self, upto=None) -> list[Fraction]:
        """Every lattice exponent strictly below the window (and below ``upto``)."""
        t = tmin(self.trunc, as_trunc(upto))
        if t is None:
            raise TruncationError("exact expansion has no finite slot window")
        return [Fraction(k, self.grain) for k in range(key_bound(t, self.grain))]

    # --- grain handling ---
    def with_grain(self, grain: int) -> "QExp":
        if grain % self.grain:
            raise GrainError(f"cannot refine grain {self.grain} to {grain}")
        f = grain // self.grain
        if f == 1:
            return self
        return QExp._make(grain, self.trunc, {k * f: c for k, c in self._c.items()})

    def _aligned(self, other: "QExp") -> tuple["QExp", "QExp"]:
        g = lcm(self.grain, other.grain)
        return self.with_grain(g), other.with_grain(g)

    # --- ring operations ---
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QExp.constant(other)
        if not isinstance(other, QExp):
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a._c)
        for k, c in b._c.items():
            terms[k] = terms.get(k, 0) + c
        return QExp._make(a.grain, tmin(a.trunc, b.trunc), terms)

    __radd__ = __add__

    def __neg__(self):
        return QExp._make(self.grain, self.trunc, {k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QExp.constant(other)
        if not isinstance(other, QExp):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "QExp":
        s = to_rational(s)
        return QExp._make(self.grain, self.trunc, {k: c * s for k, c in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QExp):
            return NotImplemented
        a, b = self._aligned(other)
        trunc = tmin(a.trunc, b.trunc)
        bound = key_bound(trunc, a.grain)
        right = sorted(b._c.items())
        out: dict[int, object] = {}
        for i, x in a._c.items():
            for j, y in right:
                k = i + j
                if not below(k, bound):
                    break
                out[k] = out.get(k, 0) + x * y
        return QExp._make(a.grain, trunc, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = QExp.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a q-expansion by zero")
            return self.scale(Fraction(1) / to_rational(other))
        if not isinstance(other, QExp):
            return NotImplemented
        return self.divide(other)

    def divide(self, den: "QExp", trunc=None) -> "QExp":
        """Quotient num/den by elimination from den's leading term upwards.

        The window shrinks by the leading exponent of ``den``; a numerator term
        below that exponent means the quotient is not a power series.
        """
        a, b = self._aligned(den)
        g = a.grain
        if not b._c:
            raise SeriesDivisionError("denominator vanishes on its window")
        m = min(b._c)
        c0 = b._c[m]
        vn = min(a._c) if a._c else key_bound(a.trunc, g)
        if vn is not None and vn < m:
            raise SeriesDivisionError(
                f"numerator starts at q^{Fraction(vn, g)} below denominator q^{Fraction(m, g)}"
            )
        mq = Fraction(m, g)
        t_num = tshift(a.trunc, -mq)
        t_den = None if b.trunc is None else b.trunc - mq + (Fraction(vn, g) - mq if vn is not None else 0)
        result_trunc = tmin(t_num, t_den, as_trunc(trunc))
        if result_trunc is None:
            raise SeriesDivisionError("quotient of exact expansions needs an explicit truncation")
        if result_trunc <= 0:
            raise SeriesDivisionError("no coefficients of the quotient are determined")
        bound = key_bound(result_trunc, g)
        residual = dict(a._c)
        den_tail = sorted((k - m, c) for k, c in b._c.items() if k != m)
        quotient: dict[int, object] = {}
        for k in range(bound):
            c = residual.pop(k + m, 0)
            if c == 0:
                continue
            q = Fraction(c) / c0
            quotient[k] = q
            for j, d in den_tail:
                target = k + j
                if target >= bound:
                    break
                residual[target + m] = residual.get(target + m, 0) - q * d
        return QExp._make(g, result_trunc, quotient)

    # --- substitutions ---
    def shift(self, s) -> "QExp":
        """Multiply by q^s (s >= 0)."""
        s = to_rational(s)
        if s < 0:
            raise ValueError("shift must be nonnegative")
        g = lcm(self.grain, s.denominator)
        x = self.with_grain(g)
        ks = int(s * g)
        return QExp._make(g, tshift(x.trunc, s), {k + ks: c for k, c in x._c.items()})

    def truncate(self, t) -> "QExp":
        return QExp._make(self.grain, tmin(self.trunc, as_trunc(t)), self._c)

    def substitute_scale(self, m: int, inverse: bool = False) -> "QExp":
        """tau -> m*tau, or tau -> tau/m with ``inverse``."""
        if not isinstance(m, int) or m < 1:
            raise ValueError("scale factor must be a positive integer")
        if inverse:
            return QExp._make(self.grain * m, tscale(self.trunc, Fraction(1, m)), self._c)
        return QExp._make(self.grain, tscale(self.trunc, m), {k * m: c for k, c in self._c.items()})

    def phase_twist_T(self) -> "QExp":
        """Coefficient at q^e times (-1)^(2e), i.e. tau -> tau + 1/2 up to scaling."""
        if 2 % self.grain:
            raise GrainError(f"phase twist needs grain dividing 2, got {self.grain}")
        f = 2 // self.grain
        return QExp._make(
            self.grain, self.trunc, {k: (-c if (k * f) % 2 else c) for k, c in self._c.items()}
        )

    # --- comparison ---
    def agrees_with(self, other: "QExp", upto=None) -> bool:
        a, b = self._aligned(other)
        t = tmin(a.trunc, b.trunc, as_trunc(upto))
        bound = key_bound(t, a.grain)
        keys = {k for k in a._c if below(k, bound)} | {k for k in b._c if below(k, bound)}
        return all(a._c.get(k, 0) == b._c.get(k, 0) for k in keys)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QExp.constant(other, self.trunc)
        if not isinstance(other, QExp):
            return NotImplemented
        return self.trunc == other.trunc and self.as_dict() == other.as_dict()

    __hash__ = None

    def __repr__(self):
        shown = " + ".join(f"{c}*q^{e}" for e, c in self.items()[:6])
        more = " + ..." if len(self._c) > 6 else ""
        return f"QExp({shown or '0'}{more} + O(q^{self.trunc}))"
