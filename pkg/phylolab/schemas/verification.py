from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from phylolab.schemas.graph import DegreeBounds


class EnumSpec(BaseModel):
    """Universe of bounded DAGs on n vertices"""
    n: int = Field(..., ge=0)
    bounds: DegreeBounds
    mode: Literal["staircase", "random"] = "staircase"
    samples: Optional[int] = Field(None, ge=1)
    seed: int = Field(0, ge=0)
    p: Optional[float] = Field(None, gt=0.0, le=1.0)

    @model_validator(mode="after")
    def random_needs_samples(self):
        if self.mode == "random" and self.samples is None:
            raise ValueError("random mode needs a sample count")
        return self


class VerifyParams(BaseModel):
    """Parameter grid for one verification run"""
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)
    n: int = Field(..., ge=1)
    n_min: int = Field(1, ge=1)
    samples: Optional[int] = Field(None, ge=1)
    seed: int = Field(0, ge=0)
    workers: int = Field(1, ge=1)

    @property
    def bounds(self) -> DegreeBounds:
        return DegreeBounds(i=self.i, j=self.j)

    @property
    def mode(self) -> str:
        return "random" if self.samples else "staircase"

    def describe(self) -> Dict[str, Any]:
        out = {"i": self.i, "j": self.j, "n_min": self.n_min, "n": self.n, "mode": self.mode}
        if self.samples:
            out.update(samples=self.samples, seed=self.seed)
        return out


class Counterexample(BaseModel):
    n: int
    arcs: List[Tuple[int, int]]
    digest: str
    witness: Dict[str, Any] = {}


class ReportRecord(BaseModel):
    """One line of a streamed verification report"""
    record: Literal["counterexample", "summary"]
    statement: str
    params: Dict[str, Any]
    digest: Optional[str] = None
    instance: Optional[int] = None
    verdict: Literal["pass", "fail"]
    witness: Optional[Dict[str, Any]] = None


class VerificationReport(BaseModel):
    statement: str
    params: Dict[str, Any]
    scope: str
    generator: Optional[str] = None
    instances_checked: int = 0
    hypothesis_fired: int = 0
    verdict: Literal["pass", "fail"] = "pass"
    counterexamples: List[Counterexample] = []
    extras: Dict[str, Any] = {}

    def summary_record(self) -> ReportRecord:
        witness = {
            "scope": self.scope,
            "instances_checked": self.instances_checked,
            "hypothesis_fired": self.hypothesis_fired,
            "counterexamples": len(self.counterexamples),
        }
        if self.generator:
            witness["generator"] = self.generator
        witness.update(self.extras)
        return ReportRecord(
            record="summary",
            statement=self.statement,
            params=self.params,
            verdict=self.verdict,
            witness=witness,
        )
