"""Hochschild (co)homology of bound quiver algebras and weighted projective lines."""

__version__ = "0.1.0"
