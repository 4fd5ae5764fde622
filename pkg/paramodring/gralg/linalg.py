"""Exact linear algebra over Q by fraction-free (Bareiss) elimination."""

import math
from fractions import Fraction


def integer_rows(rows) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = math.lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def echelon(rows) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form and its pivot columns.

    Each pivot is the candidate entry of smallest bit length in its column.
    """
    m = integer_rows(rows)
    if not m:
        return [], []
    width = len(m[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(width):
        candidates = [i for i in range(r, len(m)) if m[i][c] != 0]
        if not candidates:
            continue
        p = min(candidates, key=lambda i: abs(m[i][c]).bit_length())
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, width):
                row_i[j] = (piv * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(echelon(rows)[1])


def _back_substitute(ech: list[list[int]], pivots: list[int], ncols: int, rhs_col: int | None,
                     free_values: dict[int, Fraction]) -> list[Fraction]:
    sol = [Fraction(0)] * ncols
    for c, v in free_values.items():
        sol[c] = v
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = Fraction(ech[r][rhs_col]) if rhs_col is not None else Fraction(0)
        for j in range(c + 1, ncols):
            if ech[r][j]:
                s -= ech[r][j] * sol[j]
        sol[c] = s / ech[r][c]
    return sol


def primitive(vec) -> list[int]:
    """Scale a rational vector to coprime integers with positive first nonzero entry."""
    den = 1
    for x in vec:
        den = math.lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    return [-x for x in ints] if lead < 0 else ints


def nullspace(rows, ncols: int) -> list[list[int]]:
    """Basis of {x : M x = 0}, each vector primitive and integral."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    ech, pivots = echelon(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        values = {g: Fraction(1 if g == f else 0) for g in free}
        basis.append(primitive(_back_substitute(ech, pivots, ncols, None, values)))
    return basis


def solve(rows, rhs) -> list[Fraction] | None:
    """One solution of M x = rhs (free variables set to zero), or None when inconsistent."""
    if not rows:
        return []
    ncols = len(rows[0])
    augmented = [list(row) + [t] for row, t in zip(rows, rhs)]
    ech, pivots = echelon(augmented)
    if pivots and pivots[-1] == ncols:
        return None
    free = {c: Fraction(0) for c in range(ncols) if c not in set(pivots)}
    return _back_substitute(ech, pivots, ncols, ncols, free)
