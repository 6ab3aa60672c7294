"""Line-delimited JSON output"""
import json
from typing import IO, Any, Dict

from pydantic import BaseModel


class RecordWriter:
    """Single writer for streamed records; every record is flushed as one line"""

    def __init__(self, stream: IO[str]):
        self.stream = stream
        self.written = 0

    def write(self, record: BaseModel) -> None:
        self.stream.write(record.model_dump_json(exclude_none=True) + "\n")
        self.stream.flush()
        self.written += 1

    def __call__(self, record: BaseModel) -> None:
        self.write(record)


def dumps(payload: Dict[str, Any]) -> str:
    """Deterministic single-line JSON for non-model payloads"""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
