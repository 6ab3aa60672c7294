from typing import List, Optional, Sequence


class PhylolabError(Exception):
    """Base error; exit_status is what the command line reports"""

    exit_status: int = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InvalidGraph(PhylolabError):
    """Constructor invariant broken (loop, asymmetry, antiparallel arcs)"""


class CyclicInput(PhylolabError):
    """Digraph has a directed cycle"""

    def __init__(self, cycle: Sequence[int]):
        self.cycle: List[int] = list(cycle)
        super().__init__("digraph is not acyclic: " + " -> ".join(map(str, self.cycle)))


class OutOfRange(PhylolabError):
    """Vertex label outside 0..n-1"""


class SizeLimitExceeded(PhylolabError):
    def __init__(self, what: str, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds the configured cap {limit}")


class NotAHole(PhylolabError):
    """Vertex sequence is not an induced cycle of length at least 4"""


class HoleTooShort(PhylolabError):
    """Hole analysis needs length at least 5"""


class PreconditionViolated(PhylolabError):
    def __init__(self, clause: str, detail: Optional[str] = None):
        self.clause = clause
        super().__init__(f"precondition '{clause}' violated" + (f": {detail}" if detail else ""))


class LemmaCounterexample(PhylolabError):
    """A statement failed on an input satisfying its hypothesis"""

    exit_status = 1


class InvalidSpec(PhylolabError):
    """Malformed pattern specification"""


class InvalidParams(PhylolabError):
    """Construction or verification parameters out of range"""


class BoundsOutOfScope(PhylolabError):
    """Degree bounds outside the forbidden-list theorem's hypothesis"""


class CapExceeded(PhylolabError):
    """Exhaustive enumeration requested above the configured cap"""


class UnknownStatement(PhylolabError):
    """No verifier registered under the given id"""


class FormatError(PhylolabError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{line}:{column}: {message}")
