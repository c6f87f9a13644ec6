"""Exact combinatorics of Schubert polynomials: pipedreams, bumpless and
hybrid pipedreams, Bruhat chains, growth diagrams and group-algebra
constructions."""

__version__ = "0.1.0"
