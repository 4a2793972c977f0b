"""Cubic matrices, cubic supermatrices, quantum (super) Nambu brackets and
cochain-induced n-ary Lie brackets, with identity verifiers."""

__version__ = "0.1.0"
