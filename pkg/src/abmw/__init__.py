"""Exact computation in affine BMW algebras and extended affine Hecke algebras.

Normal forms for the affine BMW algebra on n <= 3 strands, the extended
affine Hecke algebra in the tau_pi t^b basis, Z-Brauer diagrams, and a
windowed checker for the affine cellular axioms.
"""

__version__ = "0.1.0"
