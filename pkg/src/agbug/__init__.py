"""Exact computations with graded Artinian Gorenstein algebras and their blow-ups."""

__version__ = "0.1.0"
