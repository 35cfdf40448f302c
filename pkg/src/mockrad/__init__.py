"""Exact q-series for rank-2 sheaf counting on P^2 and a generalized
Rademacher evaluator for the Fourier coefficients of h_j / eta^6."""

__version__ = "0.1.0"
