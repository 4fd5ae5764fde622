"""Exact arithmetic for paramodular, Jacobi and degenerate Hilbert modular forms."""

__version__ = "1.0.0"
