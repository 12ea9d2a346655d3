"""Exact computation with finite classical polar spaces.

The package builds the six standard families of finite classical polar
spaces over small fields, materialises the association scheme of their
dual polar graphs, and checks Cameron-Liebler sets of generators against
every one of their equivalent characterisations.  All arithmetic in the
verification paths is exact (integers and fractions); no floating point
is used anywhere.
"""

__version__ = "0.1.0"
