"""Shuffle algebra, conic vertex models and Macdonald polynomials in exact arithmetic."""

__version__ = "0.1.0"
