from paramodring.core.rational import Rational, format_rational, parse_rational, to_rational
from paramodring.core.quadratic import QuadRational, quad_conjugate, quad_is_positive
from paramodring.core.complexq import ComplexRational

__all__ = [
    "Rational", "format_rational", "parse_rational", "to_rational",
    "QuadRational", "quad_conjugate", "quad_is_positive",
    "ComplexRational",
]
