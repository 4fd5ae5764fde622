"""Elliptic and degenerate Hilbert modular forms."""
