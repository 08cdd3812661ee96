"""Exact intersection-theoretic arithmetic for Brill-Noether and
Gieseker-Petri divisors on moduli spaces of curves."""

from fractions import Fraction

from .exact_core import Partition, binomial, inv_factorial, vandermonde_det
from .ambient_ring import AmbientClass, BNParams

__all__ = [
    "AmbientClass",
    "BNParams",
    "Fraction",
    "Partition",
    "binomial",
    "inv_factorial",
    "vandermonde_det",
]

__version__ = "0.1.0"
