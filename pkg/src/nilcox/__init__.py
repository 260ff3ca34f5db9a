"""Affine nilCoxeter algebra, Pieri operators and strong Schur functions."""
