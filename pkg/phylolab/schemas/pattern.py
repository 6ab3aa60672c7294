from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

PatternKind = Literal[
    "complete", "star", "complete_bipartite", "path", "cycle", "fan", "wheel", "diamond"
]


class PatternSpec(BaseModel):
    """Named graph pattern; l is the size or rim length, m and n the bipartite parts"""
    kind: PatternKind
    l: Optional[int] = Field(None, ge=1)
    m: Optional[int] = Field(None, ge=1)
    n: Optional[int] = Field(None, ge=1)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_parameters(self):
        if self.kind == "complete_bipartite":
            if self.m is None or self.n is None:
                raise ValueError("complete_bipartite needs m and n")
        elif self.kind != "diamond" and self.l is None:
            raise ValueError(f"{self.kind} needs l")
        if self.kind in ("cycle", "wheel") and self.l < 3:
            raise ValueError("rim length must be at least 3")
        return self

    @property
    def name(self) -> str:
        if self.kind == "complete":
            return f"K_{self.l}"
        if self.kind == "star":
            return f"K_{{1,{self.l}}}"
        if self.kind == "complete_bipartite":
            return f"K_{{{self.m},{self.n}}}"
        if self.kind == "path":
            return f"P_{self.l}"
        if self.kind == "cycle":
            return f"C_{self.l}"
        if self.kind == "fan":
            return f"P_{self.l} v I_1"
        if self.kind == "wheel":
            return f"C_{self.l} v I_1"
        return "diamond"


class Violation(BaseModel):
    """embedding[p] is the vertex of G playing pattern vertex p"""
    pattern: str
    embedding: List[int]


class ForbiddenVerdict(BaseModel):
    violations: List[Violation] = []

    @property
    def clean(self) -> bool:
        return not self.violations


class NeighborhoodBoundViolation(BaseModel):
    """Vertex whose neighbourhood outgrows omega(N(u)) * (j + 1)"""
    vertex: int
    neighborhood: int
    clique_size: int
    limit: int
