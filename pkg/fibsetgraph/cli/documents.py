"""
Graph documents: versioned JSON (lossless), DOT (render-only) and plain edge lists
"""
import json

import numpy as np

from fibsetgraph.errors import DomainError
from fibsetgraph.graphcore.graphs import GraphOrigin, MultiGraph, SimpleGraph
from fibsetgraph.setspace.subsets import subset_from_elements

FORMAT_VERSION = 1


def _origin_fields(origin):
    if origin is None:
        return {"family": None, "n": None, "semantics": None, "sequence": None, "host": None}
    host = None
    if origin.host_order is not None:
        host = {"order": origin.host_order, "edges": [list(e) for e in origin.host_edges]}
    return {
        "family": origin.family,
        "n": origin.n,
        "semantics": origin.semantics,
        "sequence": origin.sequence,
        "host": host,
    }


def _multiplicities(g):
    """(u, v, multiplicity) with u < v, and (v, count) loops, both in canonical order"""
    if isinstance(g, SimpleGraph):
        return [(u, v, 1) for u, v in g.edges()], []
    rows, cols = np.nonzero(np.triu(g.eps, 1))
    edges = [(u, v, int(g.eps[u, v])) for u, v in zip(rows.tolist(), cols.tolist())]
    loops = [(v, int(g.loops[v])) for v in np.flatnonzero(g.loops).tolist()]
    return edges, loops


def graph_to_document(g):
    """
    Serializes a graph into a plain dict (the GraphDocument schema)

    Args:
        g (MultiGraph | SimpleGraph): The graph; subsets are recorded when attached

    Returns:
        dict: JSON-ready document
    """
    doc = {"format_version": FORMAT_VERSION, "kind": "simple" if isinstance(g, SimpleGraph) else "multi"}
    doc.update(_origin_fields(g.origin))
    if g.vertex_meta is not None:
        doc["ground_n"] = g.vertex_meta[0].n if g.order else None
        doc["vertices"] = [
            {"index": v, "s": meta.label.s, "i": meta.label.i, "elements": list(meta.elements)}
            for v, meta in enumerate(g.vertex_meta)
        ]
    else:
        doc["ground_n"] = None
        doc["vertices"] = [{"index": v} for v in range(g.order)]
    edges, loops = _multiplicities(g)
    doc["edges"] = [{"u": u, "v": v, "multiplicity": m} for u, v, m in edges]
    doc["loops"] = [{"v": v, "count": c} for v, c in loops]
    return doc


def _origin_from(doc):
    if doc.get("family") is None:
        return None
    host = doc.get("host")
    return GraphOrigin(
        family=doc["family"],
        n=doc.get("n"),
        semantics=doc.get("semantics"),
        sequence=doc.get("sequence"),
        host_order=host["order"] if host else None,
        host_edges=tuple(tuple(e) for e in host["edges"]) if host else (),
    )


def document_to_graph(doc):
    """
    Rebuilds the graph a document describes

    Returns:
        MultiGraph | SimpleGraph: Identical multiplicities, loops and labels
    """
    try:
        version = doc["format_version"]
        if version != FORMAT_VERSION:
            raise DomainError(f"unsupported document version {version}")
        order = len(doc["vertices"])
        meta = None
        if doc.get("ground_n") is not None:
            meta = tuple(subset_from_elements(v["elements"], doc["ground_n"]) for v in doc["vertices"])
        origin = _origin_from(doc)
        if doc["kind"] == "simple":
            edges = [(e["u"], e["v"]) for e in doc["edges"]]
            return SimpleGraph.from_edges(order, edges, meta, origin)
        eps = np.zeros((order, order), dtype=np.int64)
        for e in doc["edges"]:
            if e["multiplicity"] < 1 or not 0 <= e["u"] < e["v"] < order:
                raise DomainError(f"malformed edge entry {e}")
            if eps[e["u"], e["v"]]:
                raise DomainError(f"duplicate edge entry for pair ({e['u']}, {e['v']})")
            eps[e["u"], e["v"]] = eps[e["v"], e["u"]] = e["multiplicity"]
        loops = np.zeros(order, dtype=np.int64)
        for entry in doc["loops"]:
            if entry["count"] < 1 or not 0 <= entry["v"] < order:
                raise DomainError(f"malformed loop entry {entry}")
            if loops[entry["v"]]:
                raise DomainError(f"duplicate loop entry for vertex {entry['v']}")
            loops[entry["v"]] = entry["count"]
        return MultiGraph(eps=eps, loops=loops, vertex_meta=meta, origin=origin)
    except (KeyError, TypeError, IndexError) as e:
        raise DomainError(f"malformed graph document: {e}") from None


def dumps_json(g):
    return json.dumps(graph_to_document(g), indent=2)


def loads_json(text):
    try:
        return document_to_graph(json.loads(text))
    except json.JSONDecodeError as e:
        raise DomainError(f"graph document is not valid JSON: {e}") from None


def _node_name(g, v):
    if g.vertex_meta is None:
        return f"v{v}"
    label = g.vertex_meta[v].label
    return f"v_{label.s}_{label.i}"


def _header(g):
    origin = g.origin
    semantics = origin.semantics if origin and origin.semantics else "n/a"
    family = origin.family if origin else "graph"
    return family, semantics


def to_dot(g, edge_cap=10):
    """
    Renders a graph in DOT

    Parallel edges are drawn up to `edge_cap` times per pair; every drawn edge
    carries the true count in a `multiplicity` attribute. Loops become self-edges.

    Args:
        g (MultiGraph | SimpleGraph): The graph
        edge_cap (int): Most parallel edges drawn for one pair (>= 1)

    Returns:
        str: DOT source
    """
    if edge_cap < 1:
        raise DomainError(f"edge cap must be >= 1, got {edge_cap}")
    family, semantics = _header(g)
    lines = [f"// family: {family}", f"// semantics: {semantics}", f'graph "{family}" {{']
    for v in range(g.order):
        name = _node_name(g, v)
        if g.vertex_meta is None:
            lines.append(f'  {name} [label="{v}"];')
        else:
            meta = g.vertex_meta[v]
            lines.append(f'  {name} [label="{meta.label}", elements="{meta}"];')
    edges, loops = _multiplicities(g)
    for u, v, m in edges:
        for _ in range(min(m, edge_cap)):
            lines.append(f"  {_node_name(g, u)} -- {_node_name(g, v)} [multiplicity={m}];")
    for v, count in loops:
        for _ in range(min(count, edge_cap)):
            lines.append(f"  {_node_name(g, v)} -- {_node_name(g, v)} [multiplicity={count}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g):
    """Comment header, then `u v multiplicity` lines and `v v count` loop lines"""
    family, semantics = _header(g)
    lines = [f"# family: {family}", f"# semantics: {semantics}", f"# order: {g.order}"]
    edges, loops = _multiplicities(g)
    lines.extend(f"{u} {v} {m}" for u, v, m in edges)
    lines.extend(f"{v} {v} {c}" for v, c in loops)
    return "\n".join(lines) + "\n"


def render(g, fmt, edge_cap=10):
    if fmt == "json":
        return dumps_json(g) + "\n"
    if fmt == "dot":
        return to_dot(g, edge_cap)
    if fmt == "edges":
        return to_edge_list(g)
    raise DomainError(f"unknown output format {fmt!r}")
