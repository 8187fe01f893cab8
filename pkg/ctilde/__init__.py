"""Dual Garside structure of the affine Artin group of type C-tilde.

Elements of the germ are periodic permutations of the integers; their orbits
form non-crossing partitions of a strip between two lines X and Xi.
"""

__version__ = "0.1.0"
