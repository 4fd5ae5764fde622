from paramodring.series.qexp import QExp
from paramodring.series.biexp import BiExp
from paramodring.series.quadpair import QuadPairExp
from paramodring.series.codec import dumps, loads, series_from_json, series_to_json


def series_add(x, y):
    return x + y


def series_mul(x, y):
    return x * y


def series_scale(x, s):
    return x.scale(s)


def series_pow(x, n: int):
    return x ** n


def series_divide(num, den):
    return num.divide(den)


def substitute_scale(x, m: int, inverse: bool = False):
    return x.substitute_scale(m, inverse=inverse)


def phase_twist_T(x: QExp) -> QExp:
    return x.phase_twist_T()


__all__ = [
    "QExp", "BiExp", "QuadPairExp",
    "dumps", "loads", "series_from_json", "series_to_json",
    "series_add", "series_mul", "series_scale", "series_pow", "series_divide",
    "substitute_scale", "phase_twist_T",
]
