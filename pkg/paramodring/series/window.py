"""Truncation bookkeeping shared by the series types. ``None`` marks an exact (untruncated) series."""

import math
from fractions import Fraction

from paramodring.core.rational import to_rational


def as_trunc(t) -> Fraction | None:
    return None if t is None else to_rational(t)


def tmin(*bounds):
    finite = [b for b in bounds if b is not None]
    return min(finite) if finite else None


def tshift(t, s):
    return None if t is None else t + s


def tscale(t, m):
    return None if t is None else t * m


def key_bound(t, grain: int) -> int | None:
    """Smallest lattice key k with k/grain >= t."""
    if t is None:
        return None
    return math.ceil(t * grain)


def lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def below(key: int, bound: int | None) -> bool:
    return bound is None or key < bound
