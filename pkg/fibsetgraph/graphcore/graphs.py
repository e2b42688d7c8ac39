"""
Multigraph (multiplicity table + loop counts) and simple graph (bitmask adjacency)

Multiplicities are stored as counts in a symmetric numpy table with a zero
diagonal; loops live in a separate per-vertex vector and add 2 to a degree.
Simple graphs keep one Python-int bitmask of neighbours per vertex, which is the
representation the exact solvers work on.
"""
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from fibsetgraph.errors import DomainError


@dataclass(frozen=True)
class GraphOrigin:
    """Provenance echoed into every serialized document"""

    family: str
    n: Optional[int] = None
    semantics: Optional[str] = None
    sequence: Optional[str] = None
    host_order: Optional[int] = None
    host_edges: tuple = ()


class GraphSize(NamedTuple):
    edge_count: int
    loop_count: int


def _freeze(array):
    array.setflags(write=False)
    return array


def _bitmask_rows(matrix):
    """Converts a square boolean matrix into per-row neighbour bitmasks"""
    masks = []
    for row in np.asarray(matrix, dtype=bool):
        packed = np.packbits(row, bitorder="little")
        masks.append(int.from_bytes(packed.tobytes(), "little"))
    return tuple(masks)


@dataclass(frozen=True, eq=False)
class MultiGraph:
    eps: np.ndarray
    loops: np.ndarray
    vertex_meta: Optional[tuple] = None
    origin: Optional[GraphOrigin] = field(default=None)

    def __post_init__(self):
        eps = np.array(self.eps, dtype=np.int64, copy=True)
        loops = np.array(self.loops, dtype=np.int64, copy=True)
        if eps.ndim != 2 or eps.shape[0] != eps.shape[1]:
            raise DomainError(f"multiplicity table must be square, got shape {eps.shape}")
        if loops.shape != (eps.shape[0],):
            raise DomainError("loop vector length must equal the order")
        if not np.array_equal(eps, eps.T):
            raise DomainError("multiplicity table must be symmetric")
        if np.any(np.diag(eps)):
            raise DomainError("loops belong in the loop vector, not on the diagonal")
        if np.any(eps < 0) or np.any(loops < 0):
            raise DomainError("multiplicities and loop counts must be non-negative")
        if self.vertex_meta is not None and len(self.vertex_meta) != eps.shape[0]:
            raise DomainError("vertex_meta length must equal the order")
        object.__setattr__(self, "eps", _freeze(eps))
        object.__setattr__(self, "loops", _freeze(loops))

    @property
    def order(self):
        return int(self.eps.shape[0])

    @classmethod
    def from_simple(cls, graph):
        """Views a simple graph as a loop-free multigraph with multiplicities 0/1"""
        return cls(
            eps=graph.adjacency_matrix().astype(np.int64),
            loops=np.zeros(graph.order, dtype=np.int64),
            vertex_meta=graph.vertex_meta,
            origin=graph.origin,
        )

    def same_structure(self, other):
        """True iff both graphs have identical multiplicities, loops and labels"""
        return (
            np.array_equal(self.eps, other.eps)
            and np.array_equal(self.loops, other.loops)
            and self.vertex_meta == other.vertex_meta
        )

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.same_structure(other)

    __hash__ = None

    def label(self, v):
        """Human-readable name of vertex v ("v_{s,i}" when subsets are attached)"""
        if self.vertex_meta is None:
            return str(v)
        return str(self.vertex_meta[v].label)


@dataclass(frozen=True)
class SimpleGraph:
    order: int
    adjacency: tuple
    vertex_meta: Optional[tuple] = None
    origin: Optional[GraphOrigin] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.order:
            raise DomainError("adjacency must hold one bitmask per vertex")
        full = (1 << self.order) - 1
        for v, mask in enumerate(self.adjacency):
            if mask & ~full or mask >> v & 1:
                raise DomainError(f"vertex {v} has an out-of-range neighbour or a loop")
            for u in iter_bits(mask):
                if not self.adjacency[u] >> v & 1:
                    raise DomainError(f"adjacency is not symmetric at ({v}, {u})")

    @classmethod
    def from_matrix(cls, matrix, vertex_meta=None, origin=None):
        matrix = np.array(matrix, dtype=bool, copy=True)
        np.fill_diagonal(matrix, False)
        return cls(matrix.shape[0], _bitmask_rows(matrix), vertex_meta, origin)

    @classmethod
    def from_edges(cls, order, edges, vertex_meta=None, origin=None):
        adjacency = [0] * order
        for u, v in edges:
            if u == v or not (0 <= u < order and 0 <= v < order):
                raise DomainError(f"invalid simple edge ({u}, {v}) for order {order}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(order, tuple(adjacency), vertex_meta, origin)

    def has_edge(self, u, v):
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v):
        return frozenset(iter_bits(self.adjacency[v]))

    def edges(self):
        """Edges as (u, v) pairs with u < v, in canonical order"""
        return [(u, v) for u in range(self.order) for v in iter_bits(self.adjacency[u]) if u < v]

    def edge_count(self):
        return sum(mask.bit_count() for mask in self.adjacency) // 2

    def adjacency_matrix(self):
        matrix = np.zeros((self.order, self.order), dtype=bool)
        for u, mask in enumerate(self.adjacency):
            for v in iter_bits(mask):
                matrix[u, v] = True
        return matrix

    def label(self, v):
        if self.vertex_meta is None:
            return str(v)
        return str(self.vertex_meta[v].label)


def iter_bits(mask):
    """Indices of the set bits of a non-negative integer, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_vertex(g, v):
    if not 0 <= v < g.order:
        raise DomainError(f"vertex {v} is outside 0..{g.order - 1}")


def degrees(g):
    """Degree vector: 2*l(v) + sum of incident multiplicities"""
    return 2 * g.loops + g.eps.sum(axis=1)


def degree(g, v):
    """
    Degree of a vertex in a multigraph

    Args:
        g (MultiGraph): The graph
        v (int): Vertex index

    Returns:
        int: 2*l(v) + sum over u != v of eps(v, u)
    """
    _check_vertex(g, v)
    return int(2 * g.loops[v] + g.eps[v].sum())


def odd_degree_vertices(g):
    """Vertices of odd degree, ascending"""
    return tuple(int(v) for v in np.flatnonzero(degrees(g) % 2))


def popped(g):
    """
    Deletes all loops and collapses parallel edges to one

    Args:
        g (MultiGraph | SimpleGraph): The graph to pop; simple graphs come back unchanged

    Returns:
        SimpleGraph: u ~ v iff eps(u, v) >= 1, same order and vertex labels
    """
    if isinstance(g, SimpleGraph):
        return g
    origin = g.origin
    if origin is not None:
        origin = GraphOrigin(
            family="popped",
            n=origin.n,
            semantics=origin.semantics,
            sequence=origin.sequence,
            host_order=origin.host_order,
            host_edges=origin.host_edges,
        )
    return SimpleGraph.from_matrix(g.eps > 0, g.vertex_meta, origin)


def size(g):
    """
    Edge and loop totals of a multigraph

    Returns:
        GraphSize: (sum over u < v of eps(u, v), sum of l(v))
    """
    return GraphSize(int(np.triu(g.eps, 1).sum()), int(g.loops.sum()))


def neighborhood(g, v):
    """Open neighbourhood {u != v : eps(u, v) >= 1}; loops never put v in N(v)"""
    _check_vertex(g, v)
    return frozenset(int(u) for u in np.flatnonzero(g.eps[v]))


def eps_sum_at(g, v):
    """Sum of multiplicities from v to its neighbours"""
    _check_vertex(g, v)
    return int(g.eps[v].sum())


def vertex_deleted_size(g, v):
    """Edge count of the simple graph g - v"""
    _check_vertex(g, v)
    return g.edge_count() - g.adjacency[v].bit_count()


def to_networkx(g):
    """
    Converts to networkx: nx.Graph for simple graphs, nx.MultiGraph otherwise

    Parallel edges and loops are expanded so networkx degree conventions
    (a self-loop adds 2) match the ones used here.
    """
    import networkx as nx

    if isinstance(g, SimpleGraph):
        out = nx.Graph()
        out.add_nodes_from(range(g.order))
        out.add_edges_from(g.edges())
        return out

    out = nx.MultiGraph()
    out.add_nodes_from(range(g.order))
    rows, cols = np.nonzero(np.triu(g.eps, 1))
    for u, v in zip(rows.tolist(), cols.tolist()):
        out.add_edges_from([(u, v)] * int(g.eps[u, v]))
    for v in np.flatnonzero(g.loops).tolist():
        out.add_edges_from([(v, v)] * int(g.loops[v]))
    return out
