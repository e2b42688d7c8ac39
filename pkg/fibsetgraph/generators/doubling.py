"""
Doubling construction: grow the set-graph of {1..n} into the one of {1..n+1}

Take the graph for n as a first copy, add a second copy whose subsets gain the
element n+1, then the singleton {n+1}. Only the contributions of n+1 are
computed; everything else is reused from the input graph. The result is
checked against direct generation before it is returned.
"""
import logging

import numpy as np

from fibsetgraph.errors import ConsistencyError, DomainError
from fibsetgraph.generators.families import EdgeSemantics, gen_fib_sum_set_graph, partner_masks
from fibsetgraph.graphcore.graphs import GraphOrigin, MultiGraph
from fibsetgraph.numseq.sequences import ensure_bound, is_sum_member
from fibsetgraph.setspace.subsets import SubsetId, index_of

logger = logging.getLogger(__name__)


def gen_doubling_step(g_n, n, seq=None, sem=EdgeSemantics.STRICT):
    """
    Builds the (n+1)-graph from the n-graph by copying and extending

    Args:
        g_n (MultiGraph): Fibonacci-sum set-graph for n, with subsets attached
        n (int): Ground-set size of g_n
        seq (SumSequence): Defaults to Fibonacci; extended up to 2(n+1)
        sem (EdgeSemantics): Semantics g_n was built with

    Returns:
        MultiGraph: The graph for n+1 in canonical vertex order
    """
    sem = EdgeSemantics(sem)
    if g_n.vertex_meta is None or g_n.order != (1 << n) - 1:
        raise DomainError(f"expected the set-graph for n={n} with subsets attached")
    seq = ensure_bound(seq, 2 * (n + 1))
    new = n + 1
    size = g_n.order

    # c[A]: pairs (a, n+1) with a in A; n+1 never equals an old element
    partners = partner_masks(new, seq, EdgeSemantics.STRICT)
    c = np.array([(partners[new] & s.mask).bit_count() for s in g_n.vertex_meta], dtype=np.int64)
    same_pair = 1 if sem is EdgeSemantics.INCLUSIVE and is_sum_member(2 * new, seq) else 0

    # ordered pairs inside A: 2*l(A) distinct ones, plus (a, a) under inclusive semantics
    inner = 2 * g_n.loops
    if sem is EdgeSemantics.INCLUSIVE:
        inner = inner + np.array(
            [sum(1 for a in s.elements if is_sum_member(2 * a, seq)) for s in g_n.vertex_meta],
            dtype=np.int64,
        )

    old = g_n.eps
    # Step 1 and 2: copy, then cross edges between A and B + {n+1}
    cross = old + c[:, None]
    cross[np.diag_indices(size)] = inner + c
    upper = old + c[:, None] + c[None, :] + same_pair
    np.fill_diagonal(upper, 0)

    total = 2 * size + 1
    eps = np.zeros((total, total), dtype=np.int64)
    eps[:size, :size] = old
    eps[:size, size:2 * size] = cross
    eps[size:2 * size, :size] = cross.T
    eps[size:2 * size, size:2 * size] = upper
    # the singleton {n+1}
    eps[2 * size, :size] = c
    eps[:size, 2 * size] = c
    eps[2 * size, size:2 * size] = c + same_pair
    eps[size:2 * size, 2 * size] = c + same_pair

    loops = np.concatenate([g_n.loops, g_n.loops + c, [0]])

    extra = 1 << new
    subsets = [SubsetId(s.mask, new) for s in g_n.vertex_meta]
    subsets += [SubsetId(s.mask | extra, new) for s in g_n.vertex_meta]
    subsets.append(SubsetId(extra, new))

    order = np.empty(total, dtype=np.int64)
    for position, subset in enumerate(subsets):
        order[index_of(subset)] = position
    origin = GraphOrigin("fib_sum_set", n=new, semantics=sem.value, sequence=seq.kind.value)
    grown = MultiGraph(
        eps=eps[np.ix_(order, order)],
        loops=loops[order],
        vertex_meta=tuple(subsets[p] for p in order),
        origin=origin,
    )

    direct = gen_fib_sum_set_graph(new, seq, sem)
    if not grown.same_structure(direct):
        diff = np.argwhere(grown.eps != direct.eps)
        witness = tuple(diff[0]) if len(diff) else "loop vector"
        raise ConsistencyError(
            f"doubling step from n={n} disagrees with direct generation ({sem.value}) at {witness}"
        )
    logger.info(f"✅ Doubling step n={n} -> {new} matches direct generation ({sem.value})")
    return grown
