"""Graded-algebra tools: Hilbert series, exact ranks, relations, Stanley criteria."""

from paramodring.gralg.graded import (
    GeneratorSet, dimension_by_rank, hironaka_audit, monomials_of_weight,
    relation_residual, relations_in_weight,
)
from paramodring.gralg.hilbert import CATALOGUE, HilbertSeries, hilbert_expand
from paramodring.gralg.stanley import cyclotomic_product_test, palindrome_test

__all__ = [
    "GeneratorSet", "dimension_by_rank", "hironaka_audit", "monomials_of_weight",
    "relation_residual", "relations_in_weight",
    "CATALOGUE", "HilbertSeries", "hilbert_expand",
    "cyclotomic_product_test", "palindrome_test",
]
