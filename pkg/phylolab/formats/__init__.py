from . import dot, records, text

__all__ = ["dot", "records", "text"]
