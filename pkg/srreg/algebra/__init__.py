"""Monomial ideals, simplicial complexes, homology, graphs, symbolic powers and regularity."""
