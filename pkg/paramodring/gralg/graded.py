"""Monomials, ranks and relations for weighted generator sets of q-expansions."""

import logging
import math
from fractions import Fraction

from paramodring.errors import WindowTooSmall, WindowUnstable
from paramodring.gralg import linalg
from paramodring.series.biexp import BiExp
from paramodring.series.qexp import QExp

logger = logging.getLogger(__name__)


def _truncate(x, w):
    if isinstance(x, BiExp):
        return x.truncate(w, w)
    return x.truncate(w)


def _slots(x, w) -> list:
    if isinstance(x, BiExp):
        return x.slot_exponents((w, w))
    return x.slot_exponents(w)


def _coeff(x, slot):
    if isinstance(x, BiExp):
        return x.coeff(*slot)
    return x.coeff(slot)


def _common_grain(xs: list) -> list:
    """Refine every expansion to one grain so slot lists cover all exponents."""
    if isinstance(xs[0], BiExp):
        g1 = math.lcm(*(x.grains[0] for x in xs))
        g2 = math.lcm(*(x.grains[1] for x in xs))
        return [x.with_grains((g1, g2)) for x in xs]
    g = math.lcm(*(x.grain for x in xs))
    return [x.with_grain(g) for x in xs]


def _one_like(x):
    if isinstance(x, BiExp):
        return BiExp.constant(1, x.trunc)
    return QExp.constant(1, x.trunc)


class GeneratorSet:
    """Labelled weighted expansions sharing one window, checked at two nested windows.

    Expansions are supplied at the larger window; the smaller one is obtained
    by truncation. Monomial expansions are cached by exponent vector.
    """

    def __init__(self, members: list[tuple[str, int, object]], windows: tuple):
        if not members:
            raise ValueError("generator set is empty")
        small, large = (Fraction(w) for w in windows)
        if not small < large:
            raise ValueError(f"protocol windows must increase, got {windows}")
        self.labels = [m[0] for m in members]
        self.weights = [m[1] for m in members]
        if any(w <= 0 for w in self.weights):
            raise ValueError("generator weights must be positive")
        self.windows = (small, large)
        self.expansions = _common_grain([_truncate(m[2], large) for m in members])
        self._monomials: dict[tuple[int, ...], object] = {}

    def union(self, other: "GeneratorSet") -> "GeneratorSet":
        windows = (min(self.windows[0], other.windows[0]), min(self.windows[1], other.windows[1]))
        members = list(zip(self.labels, self.weights, self.expansions))
        members += list(zip(other.labels, other.weights, other.expansions))
        return GeneratorSet(members, windows)

    def subset(self, labels: list[str]) -> "GeneratorSet":
        members = [
            (l, w, x) for l, w, x in zip(self.labels, self.weights, self.expansions) if l in labels
        ]
        return GeneratorSet(members, self.windows)

    def monomial(self, exponents: tuple[int, ...]):
        """Expansion of prod gen_i^e_i at the larger window."""
        exponents = tuple(exponents)
        cached = self._monomials.get(exponents)
        if cached is not None:
            return cached
        if not any(exponents):
            value = _one_like(self.expansions[0])
        else:
            i = max(j for j, e in enumerate(exponents) if e)
            lower = list(exponents)
            lower[i] -= 1
            value = self.monomial(tuple(lower)) * self.expansions[i]
        self._monomials[exponents] = value
        return value

    def label_of(self, exponents: tuple[int, ...]) -> str:
        parts = [
            (lbl if e == 1 else f"{lbl}^{e}") for lbl, e in zip(self.labels, exponents) if e
        ]
        return "*".join(parts) or "1"

    def slots(self, window) -> list:
        return _slots(self.expansions[0], window)

    def matrix(self, monomials: list[tuple[int, ...]], window) -> list[list]:
        """Rows are slots, columns are monomials, at the given window."""
        slots = self.slots(window)
        columns = [self.monomial(m) for m in monomials]
        return [[_coeff(col, s) for col in columns] for s in slots]


def _weights_of(gens) -> list[int]:
    return gens.weights if isinstance(gens, GeneratorSet) else list(gens)


def monomials_of_weight(gens, k: int) -> list[tuple[int, ...]]:
    """Exponent vectors with sum e_i * w_i = k, lexicographically descending."""
    weights = _weights_of(gens)
    if k < 0:
        return []
    out: list[tuple[int, ...]] = []

    def walk(i: int, rest: int, prefix: list[int]):
        if i == len(weights) - 1:
            if rest % weights[i] == 0:
                out.append(tuple(prefix + [rest // weights[i]]))
            return
        for e in range(rest // weights[i], -1, -1):
            walk(i + 1, rest - e * weights[i], prefix + [e])

    walk(0, k, [])
    return out


def _checked_ranks(gens: GeneratorSet, k: int) -> tuple[list[tuple[int, ...]], int, list[list]]:
    monomials = monomials_of_weight(gens, k)
    if not monomials:
        return monomials, 0, []
    small, large = gens.windows
    n_slots = len(gens.slots(small))
    if n_slots <= len(monomials):
        raise WindowTooSmall(
            f"weight {k}: {n_slots} slots at window {small} for {len(monomials)} monomials"
        )
    big = gens.matrix(monomials, large)
    r_small = linalg.rank(gens.matrix(monomials, small))
    r_large = linalg.rank(big)
    if r_small != r_large:
        raise WindowUnstable(f"weight {k}: rank {r_small} at window {small}, {r_large} at {large}")
    return monomials, r_large, big


def dimension_by_rank(gens: GeneratorSet, k: int) -> int:
    _, r, _ = _checked_ranks(gens, k)
    logger.debug("weight %d: rank %d", k, r)
    return r


def relations_in_weight(gens: GeneratorSet, k: int) -> list[list[tuple[tuple[int, ...], Fraction]]]:
    """Kernel basis of the monomial matrix as (exponent vector, coefficient) lists."""
    monomials, r, big = _checked_ranks(gens, k)
    if r == len(monomials):
        return []
    relations = []
    for vec in linalg.nullspace(big, len(monomials)):
        relations.append([(m, Fraction(c)) for m, c in zip(monomials, vec) if c])
    return relations


def relation_residual(gens: GeneratorSet, relation) -> object:
    """Re-expand a relation; zero on the window when the relation holds."""
    total = None
    for m, c in relation:
        term = gens.monomial(m).scale(c)
        total = term if total is None else total + term
    return total


def hironaka_audit(free: GeneratorSet, module: GeneratorSet | None, kmax: int) -> list[dict]:
    """Predicted dimensions of free ⊕ (module generators · free) against ranks of the combined set."""
    combined = free.union(module) if module is not None else free
    table = []
    for k in range(kmax + 1):
        predicted = len(monomials_of_weight(free, k))
        if module is not None:
            predicted += sum(len(monomials_of_weight(free, k - w)) for w in module.weights)
        rank = dimension_by_rank(combined, k)
        table.append({"weight": k, "predicted": predicted, "rank": rank, "match": predicted == rank})
    return table
