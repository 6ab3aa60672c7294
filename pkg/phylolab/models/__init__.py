from .graph import Digraph, Graph

__all__ = ["Digraph", "Graph"]
