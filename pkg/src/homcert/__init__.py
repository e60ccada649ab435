"""Exact homomorphism densities of small patterns in regular graphs.

The package computes exact injective homomorphism counts and densities,
builds spectral bounding polynomials for patterns, certifies the
polynomial-majorization step that proves clique extremality, and
reproduces the extremal claims by exhaustive search at desk scale.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
