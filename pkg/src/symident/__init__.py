"""Exact verification of symmetric-polynomial expansion identities and of
the higher-order Fibonacci / Lucas sequences they specialize to."""

__version__ = "0.1.0"
