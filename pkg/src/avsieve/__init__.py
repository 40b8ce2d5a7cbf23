"""Sieves, explicit bounds and exact Weil-number checks for abelian varieties
whose ell-power torsion is constrained over a fixed number field."""

__version__ = "0.1.0"
