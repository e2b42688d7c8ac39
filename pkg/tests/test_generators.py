import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from fibsetgraph.errors import BoundError, CapacityError, DomainError
from fibsetgraph.generators.doubling import gen_doubling_step
from fibsetgraph.generators.families import (
    EdgeSemantics,
    closed_form_degree,
    gen_fib_sum_graph,
    gen_fib_sum_set_graph,
    gen_lucas_sum_set_graph,
    gen_set_graph,
    gen_set_graph_of_graph,
    loop_count,
    loop_counts,
    pair_multiplicity,
)
from fibsetgraph.graphcore.graphs import SimpleGraph, degrees
from fibsetgraph.numseq.sequences import (
    closed_form_edge_count,
    custom_sequence,
    fibonacci_sequence,
    lucas_sequence,
)
from fibsetgraph.setspace.subsets import SubsetId, iter_subsets, subset_from_elements
from fibsetgraph.verify.claims import GOLDEN_N3_INCLUSIVE_EDGES, GOLDEN_N3_LOOPS
from tests.oracles import vertex

FIB = fibonacci_sequence(40)


def _s(*elements, n=3):
    return subset_from_elements(elements, n)


@pytest.mark.parametrize("a, b, sem, expected", [
    ((1, 2), (1, 2, 3), EdgeSemantics.INCLUSIVE, 4),
    ((1, 2), (1, 3), EdgeSemantics.INCLUSIVE, 3),
    ((1, 2), (1, 3), EdgeSemantics.STRICT, 2),
    ((3,), (1, 3), EdgeSemantics.STRICT, 0),
    ((3,), (1, 3), EdgeSemantics.INCLUSIVE, 0),
])
def test_pair_multiplicity(a, b, sem, expected):
    assert pair_multiplicity(_s(*a), _s(*b), FIB, sem) == expected


def test_pair_multiplicity_needs_distinct_subsets():
    with pytest.raises(DomainError):
        pair_multiplicity(_s(1), _s(1), FIB)


@pytest.mark.parametrize("elements, expected", [((1, 2, 3), 2), ((1,), 0), ((1, 2, 3, 4), 3)])
def test_loop_count(elements, expected):
    assert loop_count(_s(*elements, n=4), FIB) == expected


def test_figure_two_golden_table(inclusive3):
    for (a, b), multiplicity in GOLDEN_N3_INCLUSIVE_EDGES.items():
        assert inclusive3.eps[vertex(3, *a), vertex(3, *b)] == multiplicity
    assert int(np.triu(inclusive3.eps, 1).sum()) == 34
    assert {v: int(c) for v, c in enumerate(inclusive3.loops) if c} == {
        vertex(3, *label): count for label, count in GOLDEN_N3_LOOPS.items()
    }


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("sem", list(EdgeSemantics))
def test_vectorised_builder_matches_pair_kernel(n, sem):
    g = gen_fib_sum_set_graph(n, sem=sem)
    subsets = list(iter_subsets(n))
    seq = fibonacci_sequence(2 * n)
    for u, a in enumerate(subsets):
        assert g.loops[u] == loop_count(a, seq)
        for v, b in enumerate(subsets):
            if u != v:
                assert g.eps[u, v] == pair_multiplicity(a, b, seq, sem)


def test_small_fib_sum_set_graphs():
    g1 = gen_fib_sum_set_graph(1)
    assert g1.order == 1 and not g1.eps.any() and not g1.loops.any()
    strict = gen_fib_sum_set_graph(2, sem=EdgeSemantics.STRICT)
    inclusive = gen_fib_sum_set_graph(2, sem=EdgeSemantics.INCLUSIVE)
    assert strict.eps[0, 2] == 1 and inclusive.eps[0, 2] == 2
    assert strict.eps[0, 1] == inclusive.eps[0, 1] == 1
    assert strict.eps[1, 2] == inclusive.eps[1, 2] == 1
    assert strict.loops.tolist() == [0, 0, 1]


def test_semantics_split_only_on_doubles():
    strict = gen_fib_sum_set_graph(4, sem=EdgeSemantics.STRICT)
    inclusive = gen_fib_sum_set_graph(4, sem=EdgeSemantics.INCLUSIVE)
    assert (inclusive.eps >= strict.eps).all()
    assert np.array_equal(inclusive.loops, strict.loops)


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("sem", list(EdgeSemantics))
def test_closed_form_degree_matches_materialized(n, sem):
    g = gen_fib_sum_set_graph(n, sem=sem)
    seq = fibonacci_sequence(2 * n)
    assert [closed_form_degree(s, seq, sem) for s in iter_subsets(n)] == degrees(g).tolist()


def test_fib_sum_graph():
    g3 = gen_fib_sum_graph(3)
    assert g3.edges() == [(0, 1), (1, 2)]
    assert gen_fib_sum_graph(1).edge_count() == 0
    assert gen_fib_sum_graph(8).edge_count() == 8
    assert g3.label(2) == "v_{1,3}"


def test_set_graph():
    assert gen_set_graph(3).edge_count() == 15
    assert gen_set_graph(1).order == 1
    assert gen_set_graph(2).edges() == [(0, 2), (1, 2)]


def test_caps_and_bounds():
    with pytest.raises(CapacityError):
        gen_fib_sum_set_graph(5, cap=4)
    with pytest.raises(CapacityError):
        gen_set_graph(13, cap=20)
    with pytest.raises(BoundError):
        gen_fib_sum_set_graph(3, seq=custom_sequence([1, 2, 3, 5], bound=5))
    with pytest.raises(DomainError):
        gen_fib_sum_graph(0)


def test_set_graph_of_graph_small_hosts():
    k1 = gen_set_graph_of_graph(SimpleGraph(1, (0,)))
    assert k1.order == 1 and not k1.eps.any()
    p2 = gen_set_graph_of_graph(SimpleGraph.from_edges(2, [(0, 1)]))
    assert p2.eps.tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert p2.loops.tolist() == [0, 0, 1]
    empty = gen_set_graph_of_graph(SimpleGraph(2, (0, 0)))
    assert not empty.eps.any() and not empty.loops.any()


@pytest.mark.parametrize("n", range(1, 6))
def test_set_graph_of_sum_graph_is_strict_set_graph(n):
    assert gen_set_graph_of_graph(n=n).same_structure(gen_fib_sum_set_graph(n, sem=EdgeSemantics.STRICT))


def test_lucas_set_graph_uses_lucas_sums():
    g = gen_lucas_sum_set_graph(3)
    assert g.origin.sequence == "lucas"
    seq = lucas_sequence(6)
    assert g.eps[vertex(3, 1, 1), vertex(3, 1, 3)] == pair_multiplicity(_s(1), _s(3), seq)
    assert g.eps[vertex(3, 1, 1), vertex(3, 1, 3)] == 1


def test_loop_counts_streams_without_cap():
    counts = dict((s.elements, c) for s, c in loop_counts(14) if s.size == 14)
    assert counts == {tuple(range(1, 15)): 16}
    assert closed_form_edge_count(14) == 16


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("sem", list(EdgeSemantics))
def test_doubling_equals_direct_generation(n, sem):
    grown = gen_doubling_step(gen_fib_sum_set_graph(n, sem=sem), n, sem=sem)
    assert grown == gen_fib_sum_set_graph(n + 1, sem=sem)


def test_doubling_rejects_wrong_input():
    with pytest.raises(DomainError):
        gen_doubling_step(gen_fib_sum_set_graph(3), 2)


@st.composite
def _subset_pairs(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    masks = st.integers(min_value=1, max_value=2 ** n - 1).map(lambda m: m << 1)
    return SubsetId(draw(masks), n), SubsetId(draw(masks), n)


@settings(max_examples=300, deadline=None)
@given(_subset_pairs(), st.sampled_from(list(EdgeSemantics)))
def test_pair_multiplicity_is_symmetric(pair, sem):
    a, b = pair
    assume(a.mask != b.mask)
    assert pair_multiplicity(a, b, FIB, sem) == pair_multiplicity(b, a, FIB, sem)
