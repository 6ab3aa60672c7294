from typing import Dict, Optional, Union

from phylolab.models.graph import Digraph, Graph


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(obj: Union[Graph, Digraph], name_map: Optional[Dict[str, int]] = None, name: str = "G") -> str:
    """DOT text with nodes in label order and edges in lexicographic order"""
    names = {v: key for key, v in (name_map or {}).items()}
    directed = isinstance(obj, Digraph)
    lines = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for v in range(obj.n):
        lines.append(f"  {v} [label={_quote(names.get(v, str(v)))}];")
    if directed:
        lines.extend(f"  {u} -> {v};" for u, v in obj.arcs())
    else:
        lines.extend(f"  {u} -- {v};" for u, v in obj.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
