"""Exact finite-truncation computations for invariant subalgebras of
semidirect-product group von Neumann algebras.

Everything is exact: GF(2) linear algebra is bit-packed, group-algebra
coefficients are Gaussian rationals, and conditional expectations are
Gram-Schmidt projections over Q(i).  No floating point anywhere.
"""

__version__ = "0.1.0"
