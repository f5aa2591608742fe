"""Exact-arithmetic verification of the intersection-theoretic and
stability numerics of rigid rank-4 bundles on generalized Kummer
fourfolds."""

__version__ = "0.1.0"
