import logging
from typing import Dict, Iterable, List, Optional, Tuple

from phylolab.core.config import settings
from phylolab.core.errors import InvalidParams, PreconditionViolated
from phylolab.models.bitset import from_vertices
from phylolab.models.graph import Digraph
from phylolab.schemas.construction import Claim, ConstructionResult
from phylolab.schemas.graph import DegreeBounds
from phylolab.services.chordality import is_chordal, is_perfect_elimination_ordering, validate_hole
from phylolab.services.cliques import maximal_cliques
from phylolab.services.core_graphs import check_bounds, induced, underlying_graph
from phylolab.services.forbidden import build_pattern, pattern
from phylolab.services.isomorphism import graphs_isomorphic
from phylolab.services.matching import is_induced_embedding
from phylolab.services.phylogeny import phylogeny_graph

logger = logging.getLogger(__name__)

NamedArc = Tuple[str, str]


def _v(j: int, k: int) -> str:
    return f"v_{{{j},{k}}}"


def _assemble(
    family: str,
    params: Dict[str, int],
    names: Iterable[str],
    arcs: Iterable[NamedArc],
    bounds: DegreeBounds,
) -> ConstructionResult:
    """Label names in lexicographic order and build the digraph"""
    name_map = {name: label for label, name in enumerate(sorted(set(names)))}
    digraph = Digraph.from_arcs(len(name_map), [(name_map[a], name_map[b]) for a, b in arcs])
    return ConstructionResult(family=family, params=params, digraph=digraph, name_map=name_map, bounds=bounds)


def _with_claims(result: ConstructionResult, claims: List[Claim]) -> ConstructionResult:
    return result.model_copy(update={"claimed": [Claim(kind="bounds")] + claims})


def hole3i(i: int) -> ConstructionResult:
    """(i,2) digraph whose U(D) has a hole of length 3i while P(D) stays chordal"""
    names = ["u"] + [_v(j, k) for j in range(i) for k in (1, 2, 3)]
    arcs = []
    for j in range(i):
        arcs += [
            (_v(j, 1), _v(j, 2)),
            (_v(j, 2), _v(j, 3)),
            (_v(j, 1), _v((j - 1) % i, 3)),
            (_v(j, 2), "u"),
        ]
    result = _assemble("hole3i", {"i": i}, names, arcs, DegreeBounds(i=i, j=2))
    hole = result.labels([_v(j, k) for j in range(i) for k in (1, 2, 3)])
    peo = result.labels(["u"] + [_v(j, k) for k in (3, 1, 2) for j in range(i)])
    return _with_claims(result, [
        Claim(kind="underlying_hole", vertices=hole),
        Claim(kind="chordal", value=1),
        Claim(kind="peo", vertices=peo),
    ])


def star_realizer(j: int) -> ConstructionResult:
    """(1,j) digraph whose phylogeny graph is K_{1,j+1} centred at v"""
    leaves = [f"w_{k}" for k in range(1, j + 1)]
    arcs = [("u", "v")] + [("v", w) for w in leaves]
    result = _assemble("star_realizer", {"j": j}, ["u", "v"] + leaves, arcs, DegreeBounds(i=1, j=j))
    return _with_claims(result, [Claim(kind="isomorphic", pattern=pattern("star", l=j + 1))])


def bipartite_realizer(j: int) -> ConstructionResult:
    """(2,j) digraph whose phylogeny graph has K_{j+1,j} induced on the u's and v's"""
    us = [f"u_{l}" for l in range(1, j + 2)]
    vs = [f"v_{l}" for l in range(1, j + 1)]
    ws = {(l, m): f"w_{{{l},{m}}}" for l in range(1, j + 1) for m in range(1, j + 1)}
    arcs = [(us[l - 1], vs[l - 1]) for l in range(1, j + 1)]
    arcs += [(vs[l - 1], ws[l, m]) for l, m in ws]
    arcs += [(us[l - 1], ws[m, l]) for l in range(1, j + 1) for m in range(1, j + 1) if l != m]
    arcs += [(us[j], ws[l, l]) for l in range(1, j + 1)]
    result = _assemble("bipartite_realizer", {"j": j}, us + vs + list(ws.values()), arcs, DegreeBounds(i=2, j=j))
    claim = Claim(kind="induced", vertices=result.labels(us + vs), pattern=pattern("complete_bipartite", m=j + 1, n=j))
    return _with_claims(result, [claim])


def _fan_parts(j: int) -> Tuple[List[str], List[NamedArc], List[str]]:
    ws = [f"w_{k}" for k in range(1, 2 * j - 1)]
    arcs = [("u", ws[k - 1]) for k in range(2, 2 * j - 1, 2)]
    arcs += [(ws[k - 1], ws[k]) for k in range(1, 2 * j - 2)]
    arcs += [("v_1", "u"), ("v_2", "u"), ("v_2", "v_3"), ("v_3", "v_4"), ("u", "v_4"), ("v_4", ws[0])]
    rim = ["v_1", "v_2", "v_3", "v_4"] + ws
    return ["u"] + rim, arcs, rim


def fan_realizer(j: int) -> ConstructionResult:
    """(2,j) digraph whose phylogeny graph contains P_{2j+2} v I_1"""
    names, arcs, rim = _fan_parts(j)
    result = _assemble("fan_realizer", {"j": j}, names, arcs, DegreeBounds(i=2, j=j))
    claim = Claim(kind="induced", vertices=result.labels(rim + ["u"]), pattern=pattern("fan", l=2 * j + 2))
    return _with_claims(result, [claim])


def wheel_realizer(j: int) -> ConstructionResult:
    """fan_realizer plus x closing the rim into C_{2j+2}"""
    names, arcs, rim = _fan_parts(j)
    arcs += [("v_1", "x"), (rim[-1], "x")]
    result = _assemble("wheel_realizer", {"j": j}, names + ["x"], arcs, DegreeBounds(i=2, j=j))
    claim = Claim(kind="induced", vertices=result.labels(rim + ["u"]), pattern=pattern("wheel", l=2 * j + 2))
    return _with_claims(result, [claim])


def clique_22() -> ConstructionResult:
    """(2,2) digraph with omega(P(D)) = 4"""
    arcs = [("A", "B"), ("A", "C"), ("E", "B"), ("C", "E"), ("C", "X"), ("B", "X")]
    result = _assemble("clique_22", {}, "ABCEX", arcs, DegreeBounds(i=2, j=2))
    return _with_claims(result, [
        Claim(kind="omega", value=4),
        Claim(kind="clique", vertices=result.labels(["A", "B", "C", "E"])),
    ])


def clique_32() -> ConstructionResult:
    """(3,2) digraph with omega(P(D)) = 6"""
    arcs = [
        ("v_1", "v_2"), ("v_1", "y"), ("v_2", "x"), ("v_2", "v_5"), ("v_3", "v_2"), ("v_3", "v_6"),
        ("v_4", "v_2"), ("v_4", "v_6"), ("v_5", "y"), ("v_5", "v_6"), ("v_6", "y"), ("v_6", "x"),
    ]
    hexagon = [f"v_{k}" for k in range(1, 7)]
    result = _assemble("clique_32", {}, hexagon + ["x", "y"], arcs, DegreeBounds(i=3, j=2))
    return _with_claims(result, [
        Claim(kind="omega", value=6),
        Claim(kind="clique", vertices=result.labels(hexagon)),
    ])


def _clique_2k2_parts(k: int) -> Tuple[List[str], List[NamedArc]]:
    xs = [f"x_{t}" for t in range(1, 2 * k)]
    ys = [f"y_{t}" for t in range(1, k)]
    arcs = [("u", "v"), ("u", "w"), ("v", "w"), ("w", "z")]
    arcs += [(x, "v") for x in xs]
    arcs += [(y, target) for y in ys for target in ("w", "z")]
    arcs += [(x, "w") for x in xs[:k - 1]]
    arcs += [(x, "z") for x in xs[k - 1:]]
    return ["u", "v", "w", "z"] + xs + ys, arcs


def clique_2k2(k: int) -> ConstructionResult:
    """(2k,2) digraph whose phylogeny graph has a clique on all vertices but z"""
    names, arcs = _clique_2k2_parts(k)
    result = _assemble("clique_2k2", {"k": k}, names, arcs, DegreeBounds(i=2 * k, j=2))
    clique = [x for x in sorted(result.name_map) if x != "z"]
    return _with_claims(result, [
        Claim(kind="omega", value=3 * k + 1),
        Claim(kind="clique", vertices=result.labels(clique)),
    ])


def clique_2k1_2(k: int) -> ConstructionResult:
    """clique_2k2(k) expanded by one copy of its smallest clique source: (2k+1,2), omega 3k+2"""
    base = clique_2k2(k)
    clique = [v for name, v in base.name_map.items() if name != "z"]
    expanded = expand_clique(base.digraph, clique, 1)
    names = base.names() + ["s_1"]
    arcs = [(names[a], names[b]) for a, b in expanded.arcs()]
    result = _assemble("clique_2k1_2", {"k": k}, names, arcs, DegreeBounds(i=2 * k + 1, j=2))
    clique_names = [x for x in sorted(result.name_map) if x != "z"]
    return _with_claims(result, [
        Claim(kind="omega", value=3 * k + 2),
        Claim(kind="clique", vertices=result.labels(clique_names)),
    ])


def expand_clique(d: Digraph, clique: Iterable[int], m: int) -> Digraph:
    """Add m copies of the smallest source of D[clique], each with that source's out-arcs.

    New vertices take labels n, n+1, ... and join the clique in P(D).
    """
    if m < 0:
        raise PreconditionViolated("m", f"expansion count must be non-negative, got {m}")
    current = sorted(set(clique))
    pg = phylogeny_graph(d)
    if not current or not pg.is_clique(from_vertices(current)):
        raise PreconditionViolated("clique", f"{current} is not a clique of P(D)")
    for _ in range(m):
        sub, labels = induced(d, current)
        source = labels[sub.sources()[0]]
        if not d.out_adj[source]:
            raise PreconditionViolated("source-out-arc", f"source {source} of the clique has no out-neighbour")
        d = d.with_vertex(d.out_adj[source])
        current.append(d.n - 1)
    return d


FAMILIES: Dict[str, Dict] = {
    "hole3i": {"build": hole3i, "param": "i", "minimum": 2},
    "star_realizer": {"build": star_realizer, "param": "j", "minimum": 1},
    "bipartite_realizer": {"build": bipartite_realizer, "param": "j", "minimum": 2},
    "fan_realizer": {"build": fan_realizer, "param": "j", "minimum": 2},
    "wheel_realizer": {"build": wheel_realizer, "param": "j", "minimum": 2},
    "clique_22": {"build": clique_22, "param": None, "minimum": None},
    "clique_32": {"build": clique_32, "param": None, "minimum": None},
    "clique_2k2": {"build": clique_2k2, "param": "k", "minimum": 2},
    "clique_2k1_2": {"build": clique_2k1_2, "param": "k", "minimum": 2},
}


def validate_claims(result: ConstructionResult) -> List[Claim]:
    """Claims that fail when re-checked through the independent modules"""
    d = result.digraph
    pg = phylogeny_graph(d)
    failed = []
    for claim in result.claimed:
        if claim.kind == "bounds":
            ok = check_bounds(d, result.bounds).passed
        elif claim.kind == "underlying_hole":
            ok = validate_hole(underlying_graph(d), claim.vertices)
        elif claim.kind == "chordal":
            ok = is_chordal(pg).chordal == bool(claim.value)
        elif claim.kind == "peo":
            ok = is_perfect_elimination_ordering(pg, claim.vertices)
        elif claim.kind == "omega":
            ok = maximal_cliques(pg).omega == claim.value
        elif claim.kind == "clique":
            ok = pg.is_clique(from_vertices(claim.vertices))
        elif claim.kind == "induced":
            ok = is_induced_embedding(pg, build_pattern(claim.pattern), claim.vertices)
        else:
            ok = graphs_isomorphic(pg, build_pattern(claim.pattern)).isomorphic
        logger.debug("%s: %s -> %s", result.family, claim.describe(), "ok" if ok else "FAILED")
        if not ok:
            failed.append(claim)
    return failed


def construct(family: str, param: Optional[int] = None, validate: Optional[bool] = None) -> ConstructionResult:
    if family not in FAMILIES:
        raise InvalidParams(f"unknown family {family}; expected one of {', '.join(FAMILIES)}")
    info = FAMILIES[family]
    if info["param"] is None:
        if param is not None:
            raise InvalidParams(f"{family} takes no parameter")
        result = info["build"]()
    else:
        if param is None or param < info["minimum"]:
            raise InvalidParams(f"{family} needs {info['param']} >= {info['minimum']}, got {param}")
        result = info["build"](param)
    if settings.DEBUG if validate is None else validate:
        failed = validate_claims(result)
        if failed:
            raise InvalidParams(f"{family}: claims failed: {'; '.join(c.describe() for c in failed)}")
    return result
