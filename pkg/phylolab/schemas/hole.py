from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel

from phylolab.models.graph import Digraph
from phylolab.schemas.chordality import Cycle, Hole

Verdict = Literal["pass", "vacuous-pass", "fail"]


class ChordComponent(BaseModel):
    """Connected component of the graph formed by the chords of C"""
    vertices: List[int]
    chords: List[Tuple[int, int]]


class HoleContext(BaseModel):
    """Everything derived from one hole of U(D)"""
    digraph: Digraph
    hole: Hole
    gamma: List[int]
    cycle: Cycle
    chords: List[Tuple[int, int]] = []
    chord_components: List[ChordComponent] = []

    class Config:
        arbitrary_types_allowed = True

    def summary(self) -> Dict[str, Any]:
        return {
            "hole": self.hole.vertices,
            "gamma": self.gamma,
            "cycle": self.cycle.vertices,
            "chords": [list(c) for c in self.chords],
            "chord_components": [c.model_dump() for c in self.chord_components],
        }


class StatementReport(BaseModel):
    """Outcome of one statement on one instance"""
    statement: str
    instance: str
    verdict: Verdict
    witness: Optional[Dict[str, Any]] = None

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"

    @property
    def fired(self) -> bool:
        return self.verdict != "vacuous-pass"
