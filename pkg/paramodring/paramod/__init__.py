"""Paramodular forms: Jacobi tables, the Gritsenko lift and pullbacks to Hilbert modular surfaces."""

from paramodring.paramod.eisenstein import (
    cohen_h, eisenstein_coefficients, eisenstein_paramodular, jacobi_eisenstein,
    jacobi_eisenstein_exact, kronecker,
)
from paramodring.paramod.jacobi import (
    JacobiFormData, format_jacobi, parse_jacobi, reduce_index, write_jacobi,
)
from paramodring.paramod.lift import (
    CombinedCoefficients, FrickeCoefficients, LiftCoefficients, ParamodularSeries,
    gritsenko_lift, koecher, lift_is_symmetric,
)
from paramodring.paramod.pullback import (
    fricke_eigenvalue, fricke_permute, pullback_P4, pullback_P4_lift, pullback_P5,
    pullback_P8, staircase_window, witt_P1, witt_taylor,
)

__all__ = [
    "CombinedCoefficients", "FrickeCoefficients", "JacobiFormData", "LiftCoefficients",
    "ParamodularSeries", "cohen_h", "eisenstein_coefficients", "eisenstein_paramodular",
    "format_jacobi", "fricke_eigenvalue", "fricke_permute", "gritsenko_lift", "jacobi_eisenstein",
    "jacobi_eisenstein_exact", "koecher", "kronecker", "lift_is_symmetric", "parse_jacobi",
    "pullback_P4", "pullback_P4_lift", "pullback_P5", "pullback_P8", "reduce_index",
    "staircase_window", "witt_P1", "witt_taylor", "write_jacobi",
]
