"""Exact verification of the symplectic matrices and embeddings behind the pullbacks."""

from paramodring.sympcheck.embeddings import (
    H5_U, P5_MATRIX, P8_MATRIX, PRINTED_U, Report, catalogue, p4_point, p5_point, p8_point,
    phi1, phi4, swap_matrix, verify_embedding, verify_H5_fixing, verify_hilbert_inversion,
)
from paramodring.sympcheck.matrices import (
    J, HalfSpacePoint, Mat4, conjugation, fricke_point, in_paramodular, is_symplectic,
    moebius_1, moebius_act, translation,
)

__all__ = [
    "H5_U", "P5_MATRIX", "P8_MATRIX", "PRINTED_U", "Report", "catalogue", "p4_point", "p5_point",
    "p8_point", "phi1", "phi4", "swap_matrix", "verify_embedding", "verify_H5_fixing",
    "verify_hilbert_inversion",
    "J", "HalfSpacePoint", "Mat4", "conjugation", "fricke_point", "in_paramodular",
    "is_symplectic", "moebius_1", "moebius_act", "translation",
]
