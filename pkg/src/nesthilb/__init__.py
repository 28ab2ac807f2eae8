"""Exact computations with zero-dimensional ideals in the affine plane."""

__version__ = "0.1.0"
