"""Logarithmic-coefficient Hankel determinants for functions starlike and
convex with respect to symmetric points."""

__version__ = "0.1.0"
