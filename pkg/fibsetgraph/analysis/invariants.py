"""
Polynomial-time invariants: connectivity, pendant vertices, parity, Eulerian
circuits, bipartiteness and loop sequences
"""
from collections import deque
from dataclasses import dataclass

import numpy as np

from fibsetgraph.errors import ConsistencyError, DomainError
from fibsetgraph.generators.families import loop_counts
from fibsetgraph.graphcore.graphs import (
    MultiGraph,
    SimpleGraph,
    degrees,
    iter_bits,
    odd_degree_vertices,
    popped,
    size,
)
from fibsetgraph.numseq.sequences import (
    SequenceKind,
    closed_form_edge_count,
    ensure_bound,
    pair_sum_count,
)


@dataclass(frozen=True)
class LoopValueList:
    n: int
    values: tuple


def _reach(adjacency, start):
    seen = 1 << start
    frontier = 1 << start
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= adjacency[v]
        frontier = grown & ~seen
        seen |= frontier
    return seen


def components(g):
    """Connected components of the popped adjacency, each a sorted tuple"""
    simple = popped(g)
    remaining = (1 << simple.order) - 1
    found = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _reach(simple.adjacency, start)
        found.append(tuple(iter_bits(comp)))
        remaining &= ~comp
    return found


def is_connected(g):
    """
    Reachability over the popped adjacency

    Args:
        g (MultiGraph | SimpleGraph): The graph

    Returns:
        bool: True iff every vertex is reachable from vertex 0 (K_1 is connected)
    """
    if g.order == 0:
        return True
    simple = popped(g)
    return _reach(simple.adjacency, 0) == (1 << simple.order) - 1


def pendant_vertices(g):
    """
    Vertices of degree exactly 1

    A looped vertex has degree >= 2 and an isolated vertex has degree 0, so
    neither is ever pendant.

    Returns:
        frozenset: Pendant vertex indices
    """
    if isinstance(g, SimpleGraph):
        g = MultiGraph.from_simple(g)
    return frozenset(int(v) for v in np.flatnonzero(degrees(g) == 1))


def all_degrees_even(g):
    """True iff every vertex degree (loops counting 2) is even"""
    if isinstance(g, SimpleGraph):
        g = MultiGraph.from_simple(g)
    return not odd_degree_vertices(g)


def _active_connected(g):
    active = np.flatnonzero(degrees(g) > 0).tolist()
    if not active:
        return True
    simple = popped(g)
    reached = _reach(simple.adjacency, active[0])
    return all(reached >> v & 1 for v in active)


def is_eulerian(g):
    """
    Closed-trail test: the non-isolated vertices are connected and all degrees even

    Loops are ordinary traversable edges; a vertex whose only edges are loops is
    non-isolated and must therefore be the whole active part of the graph.
    """
    if isinstance(g, SimpleGraph):
        g = MultiGraph.from_simple(g)
    if odd_degree_vertices(g):
        return False
    return _active_connected(g)


def eulerian_circuit(g):
    """
    Hierholzer's construction on the multiplicity table

    Args:
        g (MultiGraph): The graph

    Returns:
        list | None: Closed vertex walk using every edge and loop once, or None
    """
    if isinstance(g, SimpleGraph):
        g = MultiGraph.from_simple(g)
    if not is_eulerian(g):
        return None
    edges, loop_total = size(g)
    if edges + loop_total == 0:
        return [0] if g.order else []

    remaining = np.array(g.eps, dtype=np.int64)
    loops_left = np.array(g.loops, dtype=np.int64)
    pointer = [0] * g.order
    start = int(np.flatnonzero(degrees(g) > 0)[0])
    stack = [start]
    circuit = []
    while stack:
        v = stack[-1]
        if loops_left[v]:
            loops_left[v] -= 1
            stack.append(v)
            continue
        row = remaining[v]
        while pointer[v] < g.order and row[pointer[v]] == 0:
            pointer[v] += 1
        if pointer[v] < g.order:
            u = pointer[v]
            remaining[v, u] -= 1
            remaining[u, v] -= 1
            stack.append(u)
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    if len(circuit) != edges + loop_total + 1:
        raise ConsistencyError("Eulerian circuit does not use every edge exactly once")
    return circuit


def two_colouring(g):
    """
    Breadth-first 2-colouring of every component

    Returns:
        tuple | None: Colour (0/1) per vertex, or None when an odd cycle exists
    """
    simple = popped(g)
    colour = [-1] * simple.order
    for root in range(simple.order):
        if colour[root] != -1:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(simple.adjacency[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    return tuple(colour)


def is_bipartite(g):
    """True iff the popped graph admits a proper 2-colouring (K_1 does)"""
    return two_colouring(g) is not None


def loop_sequence(g):
    """
    The multiset of loop counts over all vertices

    Returns:
        tuple: Loop counts sorted ascending (all zeros for a simple graph)
    """
    if isinstance(g, SimpleGraph):
        return (0,) * g.order
    return tuple(sorted(int(x) for x in g.loops))


def loop_value_set(n, seq=None):
    """Distinct loop counts of the set-graph for n, counted vertex by vertex"""
    return frozenset(count for _, count in loop_counts(n, seq))


def loop_value_list(n, seq=None):
    """
    Edge counts of the sum graphs on 1..m for m = 1..n

    Each entry is the brute-force pair count; for the Fibonacci sequence it is
    also checked against the closed-form edge count.

    Args:
        n (int): Largest prefix size (>= 1)
        seq (SumSequence): Defaults to Fibonacci

    Returns:
        LoopValueList: The non-decreasing value list
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    seq = ensure_bound(seq, 2 * n)
    values = tuple(pair_sum_count(m, seq) for m in range(1, n + 1))
    if seq.kind is SequenceKind.FIBONACCI:
        for m, value in enumerate(values, start=1):
            if value != closed_form_edge_count(m):
                raise ConsistencyError(
                    f"pair count {value} and closed form {closed_form_edge_count(m)} disagree at m={m}"
                )
    if any(b < a for a, b in zip(values, values[1:])):
        raise ConsistencyError("loop value list must be non-decreasing")
    return LoopValueList(n=n, values=values)
