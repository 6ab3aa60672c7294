"""Phylogeny graphs of degree-bounded acyclic digraphs."""

__version__ = "1.0.0"
