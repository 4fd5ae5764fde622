"""Hilbert series N(t) / prod (1 - t^d) with exact integer arithmetic."""

from collections import Counter

from sympy import Poly, ZZ, symbols

t = symbols("t")


def _poly(coeffs) -> Poly:
    """Poly from ascending coefficient list."""
    return Poly(list(reversed(list(coeffs))) or [0], t, domain=ZZ)


def _one_minus(d: int) -> Poly:
    return Poly(-t ** d + 1, t, domain=ZZ)


class HilbertSeries:
    __slots__ = ("numerator", "denominators")

    def __init__(self, numerator, denominators=()):
        if isinstance(numerator, Poly):
            self.numerator = Poly(numerator.as_expr(), t, domain=ZZ)
        elif isinstance(numerator, dict):
            top = max(numerator, default=0)
            self.numerator = _poly([numerator.get(i, 0) for i in range(top + 1)])
        else:
            self.numerator = _poly(numerator)
        if any(d < 1 for d in denominators):
            raise ValueError(f"denominator exponents must be positive, got {denominators}")
        self.denominators = tuple(sorted(denominators))

    def numerator_coeffs(self) -> list[int]:
        """Ascending coefficients of the numerator."""
        return [int(c) for c in reversed(self.numerator.all_coeffs())]

    def _denominator_poly(self) -> Poly:
        p = Poly(1, t, domain=ZZ)
        for d in self.denominators:
            p = p * _one_minus(d)
        return p

    def expand(self, kmax: int) -> list[int]:
        """Coefficients of t^0 .. t^kmax."""
        coeffs = self.numerator_coeffs()[: kmax + 1]
        seq = coeffs + [0] * (kmax + 1 - len(coeffs))
        for d in self.denominators:
            for i in range(d, kmax + 1):
                seq[i] += seq[i - d]
        return seq

    def normalize(self) -> "HilbertSeries":
        """Cancel every (1 - t^d) factor that divides the numerator exactly."""
        num = self.numerator
        kept = []
        for d in sorted(self.denominators, reverse=True):
            q, r = num.div(_one_minus(d))
            if r.is_zero and not num.is_zero:
                num = q
            else:
                kept.append(d)
        return HilbertSeries(num, kept)

    def _over(self, denominators: Counter) -> Poly:
        """Numerator rewritten over the larger denominator multiset."""
        missing = denominators - Counter(self.denominators)
        num = self.numerator
        for d, mult in missing.items():
            for _ in range(mult):
                num = num * _one_minus(d)
        return num

    def _combine(self, other: "HilbertSeries", sign: int) -> "HilbertSeries":
        common = Counter(self.denominators) | Counter(other.denominators)
        num = self._over(common) + other._over(common) * sign
        return HilbertSeries(num, list(common.elements())).normalize()

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, 1)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return HilbertSeries(self.numerator * other, self.denominators)
        return HilbertSeries(
            self.numerator * other.numerator, self.denominators + other.denominators
        ).normalize()

    def shift(self, k: int) -> "HilbertSeries":
        """Multiply by t^k."""
        return HilbertSeries(self.numerator * Poly(t ** k, t, domain=ZZ), self.denominators)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.numerator * other._denominator_poly() == other.numerator * self._denominator_poly()

    __hash__ = None

    def __repr__(self):
        den = "".join(f"(1-t^{d})" for d in self.denominators)
        return f"HilbertSeries(({self.numerator.as_expr()}) / {den or '1'})"


def hilbert_expand(h: HilbertSeries, kmax: int) -> list[int]:
    return h.expand(kmax)


def _two_dense(*runs) -> dict[int, int]:
    out: dict[int, int] = {}
    for exps, c in runs:
        for e in exps:
            out[e] = out.get(e, 0) + c
    return out


# M_*(K(5)), including odd weights
K5_SERIES = HilbertSeries(
    _two_dense(
        ([0, 6, 7, 9, 11, 19, 21, 23, 24, 30], 1),
        ([8, 10, 12, 14, 16, 18, 20, 22], 2),
    ),
    (4, 5, 6, 12),
)

# M_*(K(7)), including odd weights
K7_SERIES = HilbertSeries(
    _two_dense(([0, 5, 24, 29], 1), (range(6, 24), 2)),
    (4, 4, 6, 12),
)

# symmetric degenerate Hilbert modular forms: C[X2, X4, Delta6]
MG_SYM_SERIES = HilbertSeries([1], (2, 4, 6))

# all degenerate Hilbert modular forms: free over C[X2, X4, Delta6] on 1, X8
MG_SERIES = HilbertSeries({0: 1, 8: 1}, (2, 4, 6))

# symmetric forms whose rescaled boundary values are of level one
A_SYM_SERIES = HilbertSeries({0: 1, 8: 1, 10: 1}, (4, 6, 6))

A_STAR_SERIES = HilbertSeries({0: 1, 2: -1, 6: 1, 12: 1}, (2, 4, 6))

CATALOGUE = {
    "K5": K5_SERIES,
    "K7": K7_SERIES,
    "MGsym": MG_SYM_SERIES,
    "MG": MG_SERIES,
    "Asym": A_SYM_SERIES,
    "Astar": A_STAR_SERIES,
}
