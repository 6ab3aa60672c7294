from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator


def normalize_cycle(vertices: List[int]) -> List[int]:
    """Rotate to start at the smallest label, then step toward the smaller neighbour"""
    k = len(vertices)
    start = vertices.index(min(vertices))
    forward = [vertices[(start + t) % k] for t in range(k)]
    backward = [vertices[(start - t) % k] for t in range(k)]
    return forward if forward[1] <= backward[1] else backward


class Cycle(BaseModel):
    """Cyclic vertex sequence; the closing edge is implied"""
    vertices: List[int] = Field(..., min_length=3)

    @field_validator("vertices")
    @classmethod
    def distinct(cls, v: List[int]) -> List[int]:
        if len(set(v)) != len(v):
            raise ValueError("cycle repeats a vertex")
        return v

    def __len__(self) -> int:
        return len(self.vertices)


class Hole(Cycle):
    """Chordless cycle of length at least 4"""
    vertices: List[int] = Field(..., min_length=4)


class ChordalityCertificate(BaseModel):
    """A perfect elimination ordering when chordal, otherwise a hole"""
    verdict: Literal["chordal", "non-chordal"]
    peo: Optional[List[int]] = None
    hole: Optional[Hole] = None

    @property
    def chordal(self) -> bool:
        return self.verdict == "chordal"


class CliqueReport(BaseModel):
    cliques: List[List[int]] = []
    omega: int = 0


class GraphClassFlags(BaseModel):
    """Graph-class predicates used by the (1,j) and (i,1) characterizations"""
    is_forest: bool
    is_diamond_free: bool
    max_degree: int
    is_chordal: bool
    omega: int
    clique_graph_is_forest: bool
