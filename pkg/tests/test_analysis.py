import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from fibsetgraph.analysis.invariants import (
    all_degrees_even,
    components,
    eulerian_circuit,
    is_bipartite,
    is_connected,
    is_eulerian,
    loop_sequence,
    loop_value_list,
    loop_value_set,
    pendant_vertices,
    two_colouring,
)
from fibsetgraph.generators.families import EdgeSemantics, gen_fib_sum_graph, gen_fib_sum_set_graph
from fibsetgraph.graphcore.graphs import MultiGraph, SimpleGraph, popped, size, to_networkx
from fibsetgraph.numseq.sequences import excluded_values
from tests.oracles import simple_graphs

K1 = MultiGraph(eps=np.zeros((1, 1)), loops=np.zeros(1))
P2 = MultiGraph(eps=[[0, 1], [1, 0]], loops=[0, 0])

LOOP_VALUES_21 = (0, 1, 2, 3, 4, 5, 7, 8, 9, 10, 12, 14, 15, 16, 17, 18, 19, 21, 23, 25, 26)


def test_connectivity(strict3, inclusive3):
    assert is_connected(strict3) and is_connected(inclusive3)
    assert is_connected(gen_fib_sum_set_graph(5))
    assert not is_connected(MultiGraph(eps=np.zeros((2, 2)), loops=np.zeros(2)))
    assert is_connected(K1)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("sem", list(EdgeSemantics))
def test_no_pendant_vertices(n, sem):
    assert pendant_vertices(gen_fib_sum_set_graph(n, sem=sem)) == frozenset()


def test_pendant_edge_cases():
    assert pendant_vertices(P2) == frozenset({0, 1})
    assert pendant_vertices(K1) == frozenset()
    looped = MultiGraph(eps=np.zeros((1, 1)), loops=[1])
    assert pendant_vertices(looped) == frozenset()


def test_degree_parity(strict3, inclusive3):
    assert all_degrees_even(strict3)
    assert not all_degrees_even(inclusive3)
    assert all_degrees_even(K1)


@pytest.mark.parametrize("n", range(2, 7))
def test_strict_graphs_are_eulerian(n):
    g = gen_fib_sum_set_graph(n, sem=EdgeSemantics.STRICT)
    assert is_eulerian(g)
    assert nx.is_eulerian(to_networkx(g))


def test_inclusive_n3_not_eulerian(inclusive3):
    assert not is_eulerian(inclusive3)
    assert eulerian_circuit(inclusive3) is None
    assert is_eulerian(K1)


@pytest.mark.parametrize("n", range(2, 6))
def test_eulerian_circuit_uses_every_edge_once(n):
    g = gen_fib_sum_set_graph(n, sem=EdgeSemantics.STRICT)
    circuit = eulerian_circuit(g)
    edges, loops = size(g)
    assert len(circuit) == edges + loops + 1
    assert circuit[0] == circuit[-1]
    used = np.zeros_like(g.eps)
    used_loops = np.zeros_like(g.loops)
    for u, v in zip(circuit, circuit[1:]):
        if u == v:
            used_loops[u] += 1
        else:
            used[u, v] += 1
            used[v, u] += 1
    assert np.array_equal(used, g.eps)
    assert np.array_equal(used_loops, g.loops)


def test_eulerian_requires_connected_active_part():
    two_loops = MultiGraph(eps=np.zeros((2, 2)), loops=[1, 1])
    assert not is_eulerian(two_loops)
    assert is_eulerian(MultiGraph(eps=np.zeros((2, 2)), loops=[1, 0]))


def test_loop_sequences(strict3):
    assert loop_sequence(strict3) == (0, 0, 0, 0, 1, 1, 2)
    assert loop_sequence(SimpleGraph.from_edges(3, [(0, 1)])) == (0, 0, 0)
    assert {0, 1, 2, 3} <= set(loop_sequence(gen_fib_sum_set_graph(4)))


def test_loop_value_list_21():
    values = loop_value_list(21).values
    assert values == LOOP_VALUES_21
    assert {6, 11, 13, 20, 22} <= set(excluded_values(values))


@pytest.mark.parametrize("n", range(1, 11))
def test_every_loop_value_is_attained(n):
    assert set(loop_value_list(n).values) <= loop_value_set(n)


def test_bipartiteness():
    for n in range(2, 21):
        assert is_bipartite(gen_fib_sum_graph(n))
    for n in range(2, 6):
        assert not is_bipartite(popped(gen_fib_sum_set_graph(n)))
    assert is_bipartite(K1)


def test_two_colouring_is_proper():
    g = gen_fib_sum_graph(9)
    colours = two_colouring(g)
    assert all(colours[u] != colours[v] for u, v in g.edges())


@settings(max_examples=200, deadline=None)
@given(simple_graphs())
def test_invariants_agree_with_networkx(graph):
    reference = to_networkx(graph)
    assert is_bipartite(graph) == nx.is_bipartite(reference)
    assert len(components(graph)) == nx.number_connected_components(reference)
    if graph.order:
        assert is_connected(graph) == nx.is_connected(reference)
