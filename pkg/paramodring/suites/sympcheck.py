"""Symplectic matrices and embeddings behind the pullbacks."""

from paramodring.sympcheck.embeddings import (
    Report, catalogue, verify_embedding, verify_H5_fixing, verify_hilbert_inversion,
)


def _verdict(report: Report):
    return report.passed, report.summary()


def embedding_phi1_level5():
    return _verdict(verify_embedding("phi1", 5))


def embedding_phi1_level7():
    return _verdict(verify_embedding("phi1", 7))


def embedding_phi4_level5():
    return _verdict(verify_embedding("phi4", 5))


def embedding_phi4_level7():
    return _verdict(verify_embedding("phi4", 7))


def h5_fixing():
    fixing, control = verify_H5_fixing()
    if not fixing.passed:
        return _verdict(fixing)
    return control.passed, control.summary()


def inversion_level5():
    return _verdict(verify_hilbert_inversion(5))


def inversion_level7():
    return _verdict(verify_hilbert_inversion(7))


def matrix_catalogue():
    return _verdict(catalogue())


CHECKS = [
    ("sympcheck.phi1_level5", embedding_phi1_level5),
    ("sympcheck.phi1_level7", embedding_phi1_level7),
    ("sympcheck.phi4_level5", embedding_phi4_level5),
    ("sympcheck.phi4_level7", embedding_phi4_level7),
    ("sympcheck.h5_fixing", h5_fixing),
    ("sympcheck.inversion_level5", inversion_level5),
    ("sympcheck.inversion_level7", inversion_level7),
    ("sympcheck.catalogue", matrix_catalogue),
]
