"""
Graph families over the ground set {1..n}

Edge rule between two distinct subsets A and B: count ordered element pairs
(a, b) in A x B whose sum lies in the sequence. Strict semantics skip pairs with
a == b; inclusive semantics keep them. Loops at a vertex count unordered pairs of
distinct elements inside its own subset, under both semantics.
"""
import logging
from enum import Enum

import numpy as np

from fibsetgraph.config import MATERIALIZATION_LIMIT
from fibsetgraph.errors import BoundError, CapacityError, DomainError
from fibsetgraph.graphcore.graphs import GraphOrigin, MultiGraph, SimpleGraph
from fibsetgraph.numseq.sequences import ensure_bound, is_sum_member, lucas_sequence
from fibsetgraph.setspace.subsets import SubsetId, iter_subsets

logger = logging.getLogger(__name__)


class EdgeSemantics(str, Enum):
    STRICT = "strict"
    INCLUSIVE = "inclusive"


def _require_bound(seq, n):
    if seq.bound < 2 * n:
        raise BoundError(f"sequence bound {seq.bound} is below 2n = {2 * n}")


def _check_cap(n, cap):
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    limit = min(cap, MATERIALIZATION_LIMIT)
    if n > limit:
        raise CapacityError(f"n={n} exceeds the materialization cap {limit}")


def partner_masks(n, seq, sem=EdgeSemantics.STRICT):
    """
    For each element a in 1..n, the bitmask of b in 1..n with a + b in the sequence

    Args:
        n (int): Ground-set size
        seq (SumSequence): Sequence certified up to at least 2n
        sem (EdgeSemantics): Whether b == a may pair with itself

    Returns:
        list: Index a holds the partner mask of a (index 0 unused, always 0)
    """
    _require_bound(seq, n)
    sem = EdgeSemantics(sem)
    masks = [0] * (n + 1)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if b == a and sem is EdgeSemantics.STRICT:
                continue
            if is_sum_member(a + b, seq):
                masks[a] |= 1 << b
    return masks


def _same_ground(a, b):
    if a.n != b.n:
        raise DomainError(f"subsets come from different ground sets ({a.n} vs {b.n})")


def pair_multiplicity(a, b, seq, sem=EdgeSemantics.STRICT):
    """
    Number of parallel edges between the vertices of two distinct subsets

    Args:
        a (SubsetId): First subset
        b (SubsetId): Second subset, different from the first
        seq (SumSequence): Sequence certified up to at least 2n
        sem (EdgeSemantics): Strict drops equal-valued pairs

    Returns:
        int: |{(x, y) in a x b : x + y in seq, and x != y if strict}|
    """
    _same_ground(a, b)
    if a.mask == b.mask:
        raise DomainError("pair multiplicity is defined for distinct subsets; use loop_count")
    partners = partner_masks(a.n, seq, sem)
    return sum((partners[x] & b.mask).bit_count() for x in a.elements)


def loop_count(subset, seq):
    """
    Loops at a subset's vertex: unordered pairs of distinct members summing into seq

    Args:
        subset (SubsetId): The subset
        seq (SumSequence): Sequence certified up to at least 2n

    Returns:
        int: Number of loops
    """
    partners = partner_masks(subset.n, seq, EdgeSemantics.STRICT)
    ordered = sum((partners[x] & subset.mask).bit_count() for x in subset.elements)
    return ordered // 2


def loop_counts(n, seq=None):
    """
    Loop count of every vertex without materializing any adjacency

    Args:
        n (int): Ground-set size; no cap applies
        seq (SumSequence): Defaults to Fibonacci

    Yields:
        tuple: (SubsetId, loop count) in vertex order
    """
    seq = ensure_bound(seq, 2 * n)
    partners = partner_masks(n, seq, EdgeSemantics.STRICT)
    for subset in iter_subsets(n):
        ordered = sum((partners[x] & subset.mask).bit_count() for x in subset.elements)
        yield subset, ordered // 2


def closed_form_degree(subset, seq, sem=EdgeSemantics.STRICT):
    """
    Degree of a subset's vertex in the Fibonacci-sum set-graph, without adjacency

    Every element lies in 2^(n-1) subsets, so under strict semantics the degree is
    2^(n-1) times the number of admissible (a, b) pairs with a in the subset.
    Inclusive semantics add one edge per other subset sharing an element a with
    2a in the sequence.
    """
    n = subset.n
    sem = EdgeSemantics(sem)
    partners = partner_masks(n, seq, EdgeSemantics.STRICT)
    half = 1 << (n - 1)
    total = half * sum(partners[a].bit_count() for a in subset.elements)
    if sem is EdgeSemantics.INCLUSIVE:
        doubled = sum(1 for a in subset.elements if is_sum_member(2 * a, seq))
        total += doubled * (half - 1)
    return total


def membership_matrix(subsets, n):
    """nu x n 0/1 matrix with entry (v, j-1) set iff j belongs to subset v"""
    masks = np.array([s.mask for s in subsets], dtype=np.int64)
    shifts = np.arange(1, n + 1, dtype=np.int64)
    return ((masks[:, None] >> shifts) & 1).astype(np.int64)


def pair_matrix(n, seq, sem):
    """n x n 0/1 matrix of admissible element pairs"""
    partners = partner_masks(n, seq, sem)
    matrix = np.zeros((n, n), dtype=np.int64)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if partners[a] >> b & 1:
                matrix[a - 1, b - 1] = 1
    return matrix


def _multigraph_from_pairs(subsets, n, cross, inner, origin):
    members = membership_matrix(subsets, n)
    eps = members @ cross @ members.T
    np.fill_diagonal(eps, 0)
    loops = ((members @ inner) * members).sum(axis=1) // 2
    return MultiGraph(eps=eps, loops=loops, vertex_meta=tuple(subsets), origin=origin)


def gen_fib_sum_graph(n, seq=None):
    """
    Fibonacci-sum graph on 1..n: i ~ j iff i != j and i + j is in the sequence

    Vertex k carries the singleton {k+1}, so its label is (1, k+1).

    Args:
        n (int): Number of vertices (>= 1)
        seq (SumSequence): Defaults to Fibonacci

    Returns:
        SimpleGraph: The sum graph
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    seq = ensure_bound(seq, 2 * n)
    partners = partner_masks(n, seq, EdgeSemantics.STRICT)
    adjacency = tuple(partners[a] >> 1 for a in range(1, n + 1))
    meta = tuple(SubsetId(1 << a, n) for a in range(1, n + 1))
    origin = GraphOrigin("fib_sum", n=n, sequence=seq.kind.value)
    return SimpleGraph(n, adjacency, meta, origin)


def gen_set_graph(n, cap=MATERIALIZATION_LIMIT):
    """
    Set-graph of {1..n}: distinct non-empty subsets are adjacent iff they intersect

    Args:
        n (int): Ground-set size
        cap (int): Largest n allowed to materialize

    Returns:
        SimpleGraph: 2^n - 1 vertices in (s, i) order
    """
    _check_cap(n, cap)
    logger.info(f"🔍 Building set-graph for n={n}...")
    subsets = list(iter_subsets(n))
    members = membership_matrix(subsets, n)
    intersects = (members @ members.T) > 0
    return SimpleGraph.from_matrix(intersects, tuple(subsets), GraphOrigin("set_graph", n=n))


def gen_fib_sum_set_graph(n, seq=None, sem=EdgeSemantics.STRICT, cap=MATERIALIZATION_LIMIT):
    """
    Fibonacci-sum set-graph of {1..n} (or its analogue for another sum sequence)

    Args:
        n (int): Ground-set size
        seq (SumSequence): Defaults to Fibonacci; regenerated up to 2n when possible
        sem (EdgeSemantics): Strict or inclusive cross-pair counting
        cap (int): Largest n allowed to materialize

    Returns:
        MultiGraph: Multiplicities from pair_multiplicity, loops from loop_count
    """
    _check_cap(n, cap)
    seq = ensure_bound(seq, 2 * n)
    sem = EdgeSemantics(sem)
    logger.info(f"🔍 Building {seq.kind.value}-sum set-graph for n={n} ({sem.value})...")
    subsets = list(iter_subsets(n))
    origin = GraphOrigin("fib_sum_set", n=n, semantics=sem.value, sequence=seq.kind.value)
    return _multigraph_from_pairs(
        subsets,
        n,
        cross=pair_matrix(n, seq, sem),
        inner=pair_matrix(n, seq, EdgeSemantics.STRICT),
        origin=origin,
    )


def gen_lucas_sum_set_graph(n, sem=EdgeSemantics.STRICT, cap=MATERIALIZATION_LIMIT):
    """Lucas-sum set-graph: the same construction over the Lucas numbers"""
    return gen_fib_sum_set_graph(n, lucas_sequence(2 * n), sem, cap)


def gen_set_graph_of_graph(host=None, sem=EdgeSemantics.STRICT, n=None, seq=None,
                           cap=MATERIALIZATION_LIMIT):
    """
    Set-graph of a host graph: subsets of V(host), edges counted along host edges

    Host vertex k plays the role of element k+1. Cross multiplicity counts ordered
    pairs (x, y) in A x B with xy a host edge; loops count host edges inside A.
    Semantics make no difference because a host graph has no loops.

    Args:
        host (SimpleGraph): Host graph; defaults to the Fibonacci-sum graph on 1..n
        sem (EdgeSemantics): Recorded in provenance only
        n (int): Order of the default host
        seq (SumSequence): Sequence for the default host
        cap (int): Largest host order allowed to materialize

    Returns:
        MultiGraph: 2^m - 1 vertices for a host of order m
    """
    if host is None:
        if n is None:
            raise DomainError("either a host graph or n is required")
        host = gen_fib_sum_graph(n, seq)
    m = host.order
    _check_cap(m, cap)
    sem = EdgeSemantics(sem)
    logger.info(f"🔍 Building set-graph of a host graph with {m} vertices...")
    adjacency = host.adjacency_matrix().astype(np.int64)
    subsets = list(iter_subsets(m))
    origin = GraphOrigin(
        "set_graph_of_graph",
        n=m,
        semantics=sem.value,
        host_order=m,
        host_edges=tuple(host.edges()),
    )
    return _multigraph_from_pairs(subsets, m, cross=adjacency, inner=adjacency, origin=origin)
