"""Plain-text DigraphFile and GraphFile formats.

    dag <n>          graph <n>
    a <u> <v>        e <u> <v>

Lines starting with # and blank lines are ignored.
"""
import re
from pathlib import Path
from typing import List, Set, Tuple, Union

from phylolab.core.config import settings
from phylolab.core.errors import FormatError
from phylolab.models.graph import Digraph, Graph

_TOKEN = re.compile(r"\S+")

Token = Tuple[str, int]


def _tokens(raw: str) -> List[Token]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(raw)]


def _integer(token: Token, line: int, what: str) -> int:
    text, column = token
    if not (text.isascii() and text.isdigit()):
        raise FormatError(f"expected a non-negative integer {what}, got {text!r}", line, column)
    return int(text)


def _parse(content: str, header: str, keyword: str) -> Tuple[int, List[Tuple[int, int]]]:
    n = None
    pairs: List[Tuple[int, int]] = []
    seen: Set[Tuple[int, int]] = set()
    last = 0
    for number, raw in enumerate(content.split("\n"), 1):
        last = number
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = _tokens(raw)
        if n is None:
            if tokens[0][0] != header:
                raise FormatError(f"expected header '{header} <n>', got {tokens[0][0]!r}", number, tokens[0][1])
            if len(tokens) != 2:
                raise FormatError("header takes exactly one vertex count", number, tokens[-1][1])
            n = _integer(tokens[1], number, "vertex count")
            if n > settings.MAX_VERTICES:
                raise FormatError(
                    f"vertex count {n} exceeds the limit {settings.MAX_VERTICES}", number, tokens[1][1]
                )
            continue
        if tokens[0][0] != keyword:
            raise FormatError(f"expected '{keyword} <u> <v>', got {tokens[0][0]!r}", number, tokens[0][1])
        if len(tokens) != 3:
            raise FormatError(f"'{keyword}' takes exactly two vertices", number, tokens[-1][1])
        u = _integer(tokens[1], number, "vertex")
        v = _integer(tokens[2], number, "vertex")
        for value, (_, column) in ((u, tokens[1]), (v, tokens[2])):
            if value >= n:
                raise FormatError(f"vertex {value} outside 0..{n - 1}", number, column)
        if u == v:
            raise FormatError(f"loop on vertex {u}", number, tokens[2][1])
        key = (u, v) if header == "dag" else (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate {keyword} line {u} {v}", number, tokens[0][1])
        if header == "dag" and (v, u) in seen:
            raise FormatError(f"arc {u} {v} is antiparallel to an earlier arc", number, tokens[0][1])
        seen.add(key)
        pairs.append((u, v))
    if n is None:
        raise FormatError(f"missing '{header} <n>' header", max(last, 1))
    return n, pairs


def parse_digraph(content: str) -> Digraph:
    n, arcs = _parse(content, "dag", "a")
    return Digraph.from_arcs(n, arcs)


def parse_graph(content: str) -> Graph:
    n, edges = _parse(content, "graph", "e")
    return Graph.from_edges(n, edges)


def decode(raw: bytes) -> str:
    """UTF-8 text, or a FormatError at the first undecodable byte"""
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = raw.count(b"\n", 0, exc.start) + 1
        column = len(raw[raw.rfind(b"\n", 0, exc.start) + 1:exc.start].decode("utf-8")) + 1
        raise FormatError(f"byte 0x{raw[exc.start]:02x} is not valid UTF-8", line, column) from None


def read_digraph(path: Union[str, Path]) -> Digraph:
    return parse_digraph(decode(Path(path).read_bytes()))


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(decode(Path(path).read_bytes()))


def serialize_digraph(d: Digraph) -> str:
    return "".join([f"dag {d.n}\n"] + [f"a {u} {v}\n" for u, v in d.arcs()])


def serialize_graph(g: Graph) -> str:
    return "".join([f"graph {g.n}\n"] + [f"e {u} {v}\n" for u, v in g.edges()])
