"""Exact-arithmetic computer algebra for finite-dimensional weak Hopf algebras."""

from .fields import QQ, CyclotomicField, make_field
from .wha import Element, Functional, WeakHopfAlgebra

__all__ = ["QQ", "CyclotomicField", "make_field", "Element", "Functional", "WeakHopfAlgebra"]

__version__ = "0.1.0"
