"""Subset sums modulo n, binary necklaces and cyclic V-shaped permutations."""

__version__ = "0.1.0"
