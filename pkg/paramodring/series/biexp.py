"""Truncated double q-expansions sum c(e1, e2) q1^e1 q2^e2 with a grain per variable."""

import heapq
from fractions import Fraction

from paramodring.core.rational import compact, to_rational
from paramodring.errors import GrainError, SeriesDivisionError, TruncationError
from paramodring.series.qexp import QExp
from paramodring.series.window import (
    as_trunc, below, key_bound, lcm, tmin, tscale, tshift,
)

Key = tuple[int, int]


def _clean(terms: dict) -> dict:
    return {k: compact(c) for k, c in terms.items() if c != 0}


class BiExp:
    __slots__ = ("grains", "trunc", "_c")

    def __init__(self, coeffs: dict | None = None, trunc=(None, None), grains=(1, 1)):
        g1, g2 = grains
        if g1 < 1 or g2 < 1:
            raise GrainError(f"grains must be positive integers, got {grains}")
        self.grains = (g1, g2)
        self.trunc = (as_trunc(trunc[0]), as_trunc(trunc[1]))
        b1, b2 = self._bounds()
        terms: dict[Key, object] = {}
        for (e1, e2), c in (coeffs or {}).items():
            k1 = to_rational(e1) * g1
            k2 = to_rational(e2) * g2
            if k1.denominator != 1 or k2.denominator != 1:
                raise GrainError(f"exponent ({e1}, {e2}) off the grain ({g1}, {g2})")
            key = (k1.numerator, k2.numerator)
            if key[0] < 0 or key[1] < 0:
                raise ValueError(f"negative exponent ({e1}, {e2}) in a double q-expansion")
            if below(key[0], b1) and below(key[1], b2):
                terms[key] = terms.get(key, 0) + to_rational(c)
        self._c = _clean(terms)

    @classmethod
    def _make(cls, grains, trunc, terms: dict) -> "BiExp":
        obj = cls.__new__(cls)
        obj.grains = grains
        obj.trunc = trunc
        b1, b2 = obj._bounds()
        obj._c = _clean({k: c for k, c in terms.items() if below(k[0], b1) and below(k[1], b2)})
        return obj

    @classmethod
    def constant(cls, c, trunc=(None, None)) -> "BiExp":
        return cls({(0, 0): c}, trunc)

    @classmethod
    def tensor(cls, f: QExp, g: QExp) -> "BiExp":
        """f(tau1) * g(tau2)."""
        terms = {(i, j): x * y for i, x in f._c.items() for j, y in g._c.items()}
        return cls._make((f.grain, g.grain), (f.trunc, g.trunc), terms)

    def _bounds(self) -> tuple[int | None, int | None]:
        return key_bound(self.trunc[0], self.grains[0]), key_bound(self.trunc[1], self.grains[1])

    # --- access ---
    def coeff(self, e1, e2=None):
        if e2 is None:
            e1, e2 = e1
        e1, e2 = to_rational(e1), to_rational(e2)
        t1, t2 = self.trunc
        if (t1 is not None and e1 >= t1) or (t2 is not None and e2 >= t2):
            raise TruncationError(f"q1^{e1} q2^{e2} requested, window is {self.trunc}")
        k1, k2 = e1 * self.grains[0], e2 * self.grains[1]
        if k1.denominator != 1 or k2.denominator != 1:
            return 0
        return self._c.get((k1.numerator, k2.numerator), 0)

    def __getitem__(self, key):
        return self.coeff(*key)

    def items(self) -> list[tuple[tuple[Fraction, Fraction], object]]:
        g1, g2 = self.grains
        return [((Fraction(k1, g1), Fraction(k2, g2)), c) for (k1, k2), c in sorted(self._c.items())]

    def as_dict(self) -> dict:
        return dict(self.items())

    def is_zero(self) -> bool:
        return not self._c

    def slot_exponents(self, upto=(None, None)) -> list[tuple[Fraction, Fraction]]:
        t1 = tmin(self.trunc[0], as_trunc(upto[0]))
        t2 = tmin(self.trunc[1], as_trunc(upto[1]))
        if t1 is None or t2 is None:
            raise TruncationError("exact double expansion has no finite slot window")
        g1, g2 = self.grains
        return [
            (Fraction(k1, g1), Fraction(k2, g2))
            for k1 in range(key_bound(t1, g1))
            for k2 in range(key_bound(t2, g2))
        ]

    # --- grain handling ---
    def with_grains(self, grains) -> "BiExp":
        (g1, g2), (h1, h2) = self.grains, grains
        if h1 % g1 or h2 % g2:
            raise GrainError(f"cannot refine grains {self.grains} to {grains}")
        f1, f2 = h1 // g1, h2 // g2
        if f1 == 1 and f2 == 1:
            return self
        return BiExp._make((h1, h2), self.trunc, {(a * f1, b * f2): c for (a, b), c in self._c.items()})

    def _aligned(self, other: "BiExp") -> tuple["BiExp", "BiExp"]:
        g = (lcm(self.grains[0], other.grains[0]), lcm(self.grains[1], other.grains[1]))
        return self.with_grains(g), other.with_grains(g)

    def _common_trunc(self, other: "BiExp"):
        return (tmin(self.trunc[0], other.trunc[0]), tmin(self.trunc[1], other.trunc[1]))

    # --- ring operations ---
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiExp.constant(other)
        if not isinstance(other, BiExp):
            return NotImplemented
        a, b = self._aligned(other)
        terms = dict(a._c)
        for k, c in b._c.items():
            terms[k] = terms.get(k, 0) + c
        return BiExp._make(a.grains, a._common_trunc(b), terms)

    __radd__ = __add__

    def __neg__(self):
        return BiExp._make(self.grains, self.trunc, {k: -c for k, c in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiExp.constant(other)
        if not isinstance(other, BiExp):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "BiExp":
        s = to_rational(s)
        return BiExp._make(self.grains, self.trunc, {k: c * s for k, c in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BiExp):
            return NotImplemented
        a, b = self._aligned(other)
        trunc = a._common_trunc(b)
        b1, b2 = key_bound(trunc[0], a.grains[0]), key_bound(trunc[1], a.grains[1])
        right = sorted(b._c.items())
        out: dict[Key, object] = {}
        for (i1, i2), x in a._c.items():
            for (j1, j2), y in right:
                k1 = i1 + j1
                if not below(k1, b1):
                    break
                k2 = i2 + j2
                if not below(k2, b2):
                    continue
                key = (k1, k2)
                out[key] = out.get(key, 0) + x * y
        return BiExp._make(a.grains, trunc, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = BiExp.constant(1)
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
                raise ZeroDivisionError("division of a double expansion by zero")
            return self.scale(Fraction(1) / to_rational(other))
        if not isinstance(other, BiExp):
            return NotImplemented
        return self.divide(other)

    def divide(self, den: "BiExp") -> "BiExp":
        """Quotient num/den, eliminating in the order (e1 + e2, e1).

        The leading exponent of ``den`` must be componentwise below every other
        exponent of ``den``; the window shrinks by that exponent.
        """
        a, b = self._aligned(den)
        g1, g2 = a.grains
        if not b._c:
            raise SeriesDivisionError("denominator vanishes on its window")

        def order(k: Key):
            return (Fraction(k[0], g1) + Fraction(k[1], g2), Fraction(k[0], g1))

        m = min(b._c, key=order)
        if any(k[0] < m[0] or k[1] < m[1] for k in b._c):
            raise SeriesDivisionError("denominator has no unique minimal exponent")
        c0 = b._c[m]
        mq = (Fraction(m[0], g1), Fraction(m[1], g2))
        trunc = (
            tmin(tshift(a.trunc[0], -mq[0]), tshift(b.trunc[0], -mq[0])),
            tmin(tshift(a.trunc[1], -mq[1]), tshift(b.trunc[1], -mq[1])),
        )
        if trunc[0] is None or trunc[1] is None:
            raise SeriesDivisionError("quotient of exact double expansions needs a finite window")
        if trunc[0] <= 0 or trunc[1] <= 0:
            raise SeriesDivisionError("no coefficients of the quotient are determined")
        b1, b2 = key_bound(trunc[0], g1), key_bound(trunc[1], g2)

        def inside(k: Key) -> bool:
            return k[0] - m[0] < b1 and k[1] - m[1] < b2

        residual = {k: c for k, c in a._c.items() if inside(k)}
        heap = [(order(k), k) for k in residual]
        heapq.heapify(heap)
        den_tail = [((k[0] - m[0], k[1] - m[1]), c) for k, c in b._c.items() if k != m]
        quotient: dict[Key, object] = {}
        while heap:
            _, k = heapq.heappop(heap)
            c = residual.pop(k, 0)
            if c == 0:
                continue
            if k[0] < m[0] or k[1] < m[1]:
                raise SeriesDivisionError("quotient has a term with negative exponent")
            q = Fraction(c) / c0
            qk = (k[0] - m[0], k[1] - m[1])
            quotient[qk] = q
            for (j1, j2), d in den_tail:
                t = (k[0] + j1, k[1] + j2)
                if not inside(t):
                    continue
                if t not in residual:
                    heapq.heappush(heap, (order(t), t))
                residual[t] = residual.get(t, 0) - q * d
        return BiExp._make(a.grains, trunc, quotient)

    # --- substitutions and slices ---
    def swap(self) -> "BiExp":
        return BiExp._make(
            (self.grains[1], self.grains[0]),
            (self.trunc[1], self.trunc[0]),
            {(k2, k1): c for (k1, k2), c in self._c.items()},
        )

    def shift(self, s1, s2) -> "BiExp":
        s1, s2 = to_rational(s1), to_rational(s2)
        if s1 < 0 or s2 < 0:
            raise ValueError("shift must be nonnegative")
        g = (lcm(self.grains[0], s1.denominator), lcm(self.grains[1], s2.denominator))
        x = self.with_grains(g)
        d1, d2 = int(s1 * g[0]), int(s2 * g[1])
        return BiExp._make(
            g, (tshift(x.trunc[0], s1), tshift(x.trunc[1], s2)),
            {(k1 + d1, k2 + d2): c for (k1, k2), c in x._c.items()},
        )

    def truncate(self, t1=None, t2=None) -> "BiExp":
        return BiExp._make(
            self.grains,
            (tmin(self.trunc[0], as_trunc(t1)), tmin(self.trunc[1], as_trunc(t2))),
            self._c,
        )

    def substitute_scale(self, m: int, inverse: bool = False, variables=(0, 1)) -> "BiExp":
        if not isinstance(m, int) or m < 1:
            raise ValueError("scale factor must be a positive integer")
        grains = list(self.grains)
        trunc = list(self.trunc)
        factor = [1, 1]
        for v in variables:
            if inverse:
                grains[v] *= m
                trunc[v] = tscale(trunc[v], Fraction(1, m))
            else:
                factor[v] = m
                trunc[v] = tscale(trunc[v], m)
        return BiExp._make(
            tuple(grains), tuple(trunc),
            {(k1 * factor[0], k2 * factor[1]): c for (k1, k2), c in self._c.items()},
        )

    def slice(self, which: int, index=0) -> QExp:
        """Coefficients with q1-exponent ``index`` (which=1, a series in q2) or q2-exponent ``index`` (which=2)."""
        if which == 1:
            if self.trunc[0] is not None and to_rational(index) >= self.trunc[0]:
                raise TruncationError(f"row q1^{index} is outside the window")
            k = to_rational(index) * self.grains[0]
            terms = {k2: c for (k1, k2), c in self._c.items() if k1 == k}
            return QExp._make(self.grains[1], self.trunc[1], terms)
        if which == 2:
            return self.swap().slice(1, index)
        raise ValueError(f"slice selector must be 1 or 2, got {which}")

    def diagonal(self) -> QExp:
        """Restriction tau1 = tau2 = tau."""
        g = lcm(*self.grains)
        x = self.with_grains((g, g))
        trunc = tmin(*x.trunc)
        bound = key_bound(trunc, g)
        out: dict[int, object] = {}
        for (k1, k2), c in x._c.items():
            k = k1 + k2
            if below(k, bound):
                out[k] = out.get(k, 0) + c
        return QExp._make(g, trunc, out)

    # --- comparison ---
    def agrees_with(self, other: "BiExp", upto=(None, None)) -> bool:
        a, b = self._aligned(other)
        t1 = tmin(a.trunc[0], b.trunc[0], as_trunc(upto[0]))
        t2 = tmin(a.trunc[1], b.trunc[1], as_trunc(upto[1]))
        b1, b2 = key_bound(t1, a.grains[0]), key_bound(t2, a.grains[1])
        keys = {k for k in a._c if below(k[0], b1) and below(k[1], b2)}
        keys |= {k for k in b._c if below(k[0], b1) and below(k[1], b2)}
        return all(a._c.get(k, 0) == b._c.get(k, 0) for k in keys)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiExp.constant(other, self.trunc)
        if not isinstance(other, BiExp):
            return NotImplemented
        return self.trunc == other.trunc and self.as_dict() == other.as_dict()

    __hash__ = None

    def __repr__(self):
        shown = " + ".join(f"{c}*q1^{e1}*q2^{e2}" for (e1, e2), c in self.items()[:5])
        more = " + ..." if len(self._c) > 5 else ""
        return f"BiExp({shown or '0'}{more}; window {self.trunc})"
