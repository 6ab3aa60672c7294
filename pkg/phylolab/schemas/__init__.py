from .graph import DegreeBounds, BoundsViolation, BoundsCheck, IsomorphismResult, CaredEdge, CaredEdgeMap
from .chordality import Cycle, Hole, ChordalityCertificate, CliqueReport, GraphClassFlags
from .hole import ChordComponent, HoleContext, StatementReport
from .pattern import PatternSpec, Violation, ForbiddenVerdict, NeighborhoodBoundViolation
from .construction import Claim, ConstructionResult
from .verification import EnumSpec, VerifyParams, Counterexample, ReportRecord, VerificationReport

__all__ = [
    "DegreeBounds", "BoundsViolation", "BoundsCheck", "IsomorphismResult", "CaredEdge", "CaredEdgeMap",
    "Cycle", "Hole", "ChordalityCertificate", "CliqueReport", "GraphClassFlags",
    "ChordComponent", "HoleContext", "StatementReport",
    "PatternSpec", "Violation", "ForbiddenVerdict", "NeighborhoodBoundViolation",
    "Claim", "ConstructionResult",
    "EnumSpec", "VerifyParams", "Counterexample", "ReportRecord", "VerificationReport",
]
