from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field


class DegreeBounds(BaseModel):
    """Maximum indegree i and maximum outdegree j"""
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)

    class Config:
        frozen = True

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


class BoundsViolation(BaseModel):
    """One vertex over one of its degree bounds"""
    vertex: int
    bound: Literal["indegree", "outdegree"]
    degree: int
    limit: int


class BoundsCheck(BaseModel):
    """Result of checking a digraph against DegreeBounds"""
    passed: bool
    violations: List[BoundsViolation] = []


class IsomorphismResult(BaseModel):
    """mapping[v] is the image in the second graph of vertex v of the first"""
    isomorphic: bool
    mapping: Optional[List[int]] = None


class CaredEdge(BaseModel):
    """Edge of C(D) missing from U(D) and every common out-neighbour of its ends"""
    u: int
    v: int
    caring: List[int] = Field(..., min_length=1)


class CaredEdgeMap(BaseModel):
    """Cared edges in lexicographic order"""
    entries: List[CaredEdge] = []

    def as_dict(self) -> Dict[Tuple[int, int], List[int]]:
        return {(e.u, e.v): e.caring for e in self.entries}

    def caring(self, u: int, v: int) -> List[int]:
        if u > v:
            u, v = v, u
        return self.as_dict().get((u, v), [])

    def __len__(self) -> int:
        return len(self.entries)
