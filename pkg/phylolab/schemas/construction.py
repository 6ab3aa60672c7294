from typing import Dict, List, Literal, Optional

from pydantic import BaseModel

from phylolab.models.graph import Digraph
from phylolab.schemas.graph import DegreeBounds
from phylolab.schemas.pattern import PatternSpec

ClaimKind = Literal[
    "bounds", "underlying_hole", "chordal", "peo", "omega", "clique", "induced", "isomorphic"
]


class Claim(BaseModel):
    """Property a construction certifies about its digraph D and P(D)"""
    kind: ClaimKind
    value: Optional[int] = None
    vertices: List[int] = []
    pattern: Optional[PatternSpec] = None

    def describe(self) -> str:
        if self.kind == "bounds":
            return "D satisfies its degree bounds"
        if self.kind == "underlying_hole":
            return f"U(D) has the hole {self.vertices}"
        if self.kind == "chordal":
            return "P(D) chordal" if self.value else "P(D) not chordal"
        if self.kind == "peo":
            return f"{self.vertices} is a perfect elimination ordering of P(D)"
        if self.kind == "omega":
            return f"omega(P(D)) = {self.value}"
        if self.kind == "clique":
            return f"{self.vertices} is a clique of P(D)"
        if self.kind == "induced":
            return f"P(D) contains {self.pattern.name} induced on {self.vertices}"
        return f"P(D) is isomorphic to {self.pattern.name}"


class ConstructionResult(BaseModel):
    family: str
    params: Dict[str, int] = {}
    digraph: Digraph
    name_map: Dict[str, int]
    bounds: DegreeBounds
    claimed: List[Claim] = []

    class Config:
        arbitrary_types_allowed = True

    def label(self, name: str) -> int:
        return self.name_map[name]

    def labels(self, names: List[str]) -> List[int]:
        return [self.name_map[x] for x in names]

    def names(self) -> List[str]:
        """Names indexed by label"""
        by_label = [""] * self.digraph.n
        for name, v in self.name_map.items():
            by_label[v] = name
        return by_label
