"""Coloured Hopf algebras, coloured universal R-matrices and their numerical verification."""

__version__ = "0.1.0"
