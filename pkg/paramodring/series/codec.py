"""JSON encoding of series. Exponents and coefficients are exact strings, terms sorted by exponent."""

import json

from paramodring.core.quadratic import QuadRational
from paramodring.core.rational import format_rational, parse_rational
from paramodring.series.biexp import BiExp
from paramodring.series.qexp import QExp
from paramodring.series.quadpair import QuadPairExp


def _trunc_out(t):
    return None if t is None else format_rational(t)


def _trunc_in(t):
    return None if t is None else parse_rational(str(t))


def series_to_json(x) -> dict:
    if isinstance(x, QExp):
        return {
            "kind": "qexp",
            "grain": x.grain,
            "trunc": _trunc_out(x.trunc),
            "coeffs": [[format_rational(e), format_rational(c)] for e, c in x.items()],
        }
    if isinstance(x, BiExp):
        return {
            "kind": "biexp",
            "grain": list(x.grains),
            "trunc": [_trunc_out(t) for t in x.trunc],
            "coeffs": [
                [format_rational(e1), format_rational(e2), format_rational(c)]
                for (e1, e2), c in x.items()
            ],
        }
    if isinstance(x, QuadPairExp):
        return {
            "kind": "quadpair",
            "discriminant": x.d,
            "trunc": _trunc_out(x.trunc),
            "coeffs": [[str(xi), format_rational(c)] for xi, c in x.items()],
        }
    raise TypeError(f"no JSON encoding for {type(x).__name__}")


def series_from_json(data: dict):
    kind = data.get("kind")
    if kind == "qexp":
        coeffs = {parse_rational(e): parse_rational(c) for e, c in data["coeffs"]}
        return QExp(coeffs, _trunc_in(data["trunc"]), int(data["grain"]))
    if kind == "biexp":
        coeffs = {
            (parse_rational(e1), parse_rational(e2)): parse_rational(c)
            for e1, e2, c in data["coeffs"]
        }
        trunc = tuple(_trunc_in(t) for t in data["trunc"])
        return BiExp(coeffs, trunc, tuple(int(g) for g in data["grain"]))
    if kind == "quadpair":
        d = int(data["discriminant"])
        coeffs = {QuadRational.parse(xi): parse_rational(c) for xi, c in data["coeffs"]}
        return QuadPairExp(coeffs, _trunc_in(data["trunc"]), d)
    raise ValueError(f"unknown series kind {kind!r}")


def dumps(x) -> str:
    return json.dumps(series_to_json(x), indent=1, sort_keys=True)


def loads(text: str):
    return series_from_json(json.loads(text))
