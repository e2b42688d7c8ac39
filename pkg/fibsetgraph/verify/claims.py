"""
Checkable claims about the Fibonacci-sum set-graph family

Each check receives a ClaimContext for one (n, semantics) pair and returns a
ClaimOutcome. Failures are data: a failing outcome always names a witness.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Optional

from fibsetgraph.analysis.invariants import (
    components,
    eulerian_circuit,
    is_bipartite,
    is_connected,
    is_eulerian,
    loop_value_list,
    loop_value_set,
    pendant_vertices,
)
from fibsetgraph.analysis.solvers import CycleOutcome, hamiltonian_cycle
from fibsetgraph.errors import ConsistencyError
from fibsetgraph.generators.doubling import gen_doubling_step
from fibsetgraph.generators.families import (
    EdgeSemantics,
    gen_fib_sum_graph,
    gen_fib_sum_set_graph,
    gen_set_graph,
    loop_count,
    loop_counts,
)
from fibsetgraph.graphcore.graphs import (
    degree,
    eps_sum_at,
    odd_degree_vertices,
    popped,
    size,
    vertex_deleted_size,
)
from fibsetgraph.numseq.sequences import (
    SequenceKind,
    closed_form_edge_count,
    excluded_values,
    pair_sum_count,
    sequence_for,
)
from fibsetgraph.setspace.subsets import full_set, index_of


class ClaimStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED_BUDGET = "skipped_budget"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class ClaimOutcome:
    status: ClaimStatus
    witness: Optional[str] = None
    details: dict = field(default_factory=dict)


def passed(ok, witness, **details):
    """PASS or FAIL with the witness kept only for failures"""
    if ok:
        return ClaimOutcome(ClaimStatus.PASS, None, details)
    return ClaimOutcome(ClaimStatus.FAIL, witness, details)


def skipped(reason):
    return ClaimOutcome(ClaimStatus.SKIPPED_BUDGET, None, {"reason": reason})


def not_applicable(reason):
    return ClaimOutcome(ClaimStatus.NOT_APPLICABLE, None, {"reason": reason})


class ClaimContext:
    """One (n, semantics) instance; graphs are built lazily and shared between claims"""

    def __init__(self, n, semantics, sequence_kind, settings):
        self.n = n
        self.semantics = EdgeSemantics(semantics)
        self.sequence_kind = SequenceKind(sequence_kind)
        self.settings = settings
        self.seq = sequence_for(self.sequence_kind, 2 * (n + 1))

    @property
    def fibonacci(self):
        return self.sequence_kind is SequenceKind.FIBONACCI

    @property
    def materializable(self):
        return self.n <= self.settings.max_n

    @property
    def loops_countable(self):
        return self.n <= self.settings.loop_max_n

    @cached_property
    def graph(self):
        return gen_fib_sum_set_graph(self.n, self.seq, self.semantics, cap=self.settings.max_n)

    @cached_property
    def popped_graph(self):
        return popped(self.graph)

    @cached_property
    def full_vertex(self):
        return index_of(full_set(self.n))


def _too_big(ctx):
    return skipped(f"n={ctx.n} exceeds the materialization cap {ctx.settings.max_n}")


# Golden multiplicities of the n=3 inclusive graph, keyed by (s, i) labels
GOLDEN_N3_INCLUSIVE_EDGES = {
    ((1, 1), (1, 2)): 1, ((1, 1), (2, 1)): 2, ((1, 1), (2, 2)): 1, ((1, 1), (2, 3)): 1,
    ((1, 1), (3, 1)): 2, ((1, 2), (1, 3)): 1, ((1, 2), (2, 1)): 1, ((1, 2), (2, 2)): 2,
    ((1, 2), (2, 3)): 1, ((1, 2), (3, 1)): 2, ((1, 3), (2, 1)): 1, ((1, 3), (2, 3)): 1,
    ((1, 3), (3, 1)): 1, ((2, 1), (2, 2)): 3, ((2, 1), (2, 3)): 2, ((2, 1), (3, 1)): 4,
    ((2, 2), (2, 3)): 2, ((2, 2), (3, 1)): 3, ((2, 3), (3, 1)): 3,
}
GOLDEN_N3_LOOPS = {(2, 1): 1, (2, 3): 1, (3, 1): 2}


def check_order_size_chain(ctx):
    if not ctx.materializable:
        return _too_big(ctx)
    n = ctx.n
    sum_edges = gen_fib_sum_graph(n, ctx.seq).edge_count()
    set_edges = gen_set_graph(n, cap=ctx.settings.max_n).edge_count()
    edges, loops = size(ctx.graph)
    total = edges + loops
    popped_size = ctx.popped_graph.edge_count()
    vertices = (1 << n) - 1

    order_ok = n <= vertices and (n == vertices) == (n == 1)
    chain_ok = sum_edges <= set_edges <= total
    equality = sum_edges == set_edges == total
    return passed(
        order_ok and chain_ok and equality == (n == 1),
        f"orders {n} <= {vertices}; sizes {sum_edges} <= {set_edges} <= {total}",
        sum_graph_edges=sum_edges,
        set_graph_edges=set_edges,
        total_reading=total,
        popped_reading=popped_size,
        popped_chain_holds=sum_edges <= set_edges <= popped_size,
    )


def check_no_pendant(ctx):
    if not ctx.materializable:
        return _too_big(ctx)
    pendant = sorted(pendant_vertices(ctx.graph))
    witness = None
    if pendant:
        witness = f"{ctx.graph.label(pendant[0])} degree 1"
    return passed(not pendant, witness, pendant_count=len(pendant))


def check_connected(ctx):
    if not ctx.materializable:
        return _too_big(ctx)
    parts = components(ctx.graph)
    witness = None
    if len(parts) > 1:
        witness = f"{ctx.graph.label(parts[1][0])} unreachable from {ctx.graph.label(0)}"
    return passed(is_connected(ctx.graph), witness, components=len(parts))


def check_hamiltonian(ctx):
    if ctx.n > ctx.settings.hamiltonian_max_n:
        return skipped(f"n={ctx.n} exceeds the Hamiltonian search cap {ctx.settings.hamiltonian_max_n}")
    if not ctx.materializable:
        return _too_big(ctx)
    result = hamiltonian_cycle(ctx.popped_graph, ctx.settings.budget)
    if result.outcome is CycleOutcome.UNKNOWN:
        return skipped(f"budget of {ctx.settings.budget} expansions exhausted")
    length = len(result.cycle)
    return passed(
        result.outcome is CycleOutcome.FOUND,
        "search proved no Hamiltonian cycle exists",
        cycle_length=length,
        odd_cycle=length % 2 == 1,
        expansions=result.expansions,
    )


def _loop_profile(ctx):
    return list(loop_counts(ctx.n, ctx.seq))


def check_unique_max_loop(ctx):
    if not ctx.loops_countable:
        return skipped(f"n={ctx.n} exceeds the loop-counting cap {ctx.settings.loop_max_n}")
    profile = _loop_profile(ctx)
    target = pair_sum_count(ctx.n, ctx.seq)
    top = max(count for _, count in profile)
    leaders = [subset for subset, count in profile if count == top]
    full = full_set(ctx.n)
    ok = top == target and leaders == [full]
    witness = f"max loop {top} at {', '.join(str(s.label) for s in leaders[:3])}; expected {target} at {full.label}"
    return passed(ok, witness, max_loop=top, sum_graph_edges=target, leaders=len(leaders))


def check_closed_form(ctx):
    if not ctx.fibonacci:
        return not_applicable("closed form is specific to the Fibonacci numbers")
    loops = loop_count(full_set(ctx.n), ctx.seq)
    formula = closed_form_edge_count(ctx.n)
    brute = pair_sum_count(ctx.n, ctx.seq)
    return passed(
        loops == formula == brute,
        f"l({full_set(ctx.n).label}) = {loops}, formula = {formula}, pair count = {brute}",
        loop_number=loops,
        formula=formula,
    )


def check_loop_coverage(ctx):
    if not ctx.loops_countable:
        return skipped(f"n={ctx.n} exceeds the loop-counting cap {ctx.settings.loop_max_n}")
    values = loop_value_list(ctx.n, ctx.seq).values
    present = loop_value_set(ctx.n, ctx.seq)
    missing = [v for v in values if v not in present]
    return passed(
        not missing,
        f"loop value {missing[0]} attained by no vertex" if missing else None,
        values=list(values),
        excluded=list(excluded_values(values)),
    )


def check_even_degrees(ctx):
    if not ctx.materializable:
        return _too_big(ctx)
    odd = odd_degree_vertices(ctx.graph)
    witness = None
    if odd:
        witness = f"{ctx.graph.label(odd[0])} degree {degree(ctx.graph, odd[0])}"
    return passed(not odd, witness, odd_vertices=len(odd))


def check_eulerian(ctx):
    if not ctx.materializable:
        return _too_big(ctx)
    if is_eulerian(ctx.graph):
        circuit = eulerian_circuit(ctx.graph)
        return passed(True, None, circuit_edges=len(circuit) - 1)
    odd = odd_degree_vertices(ctx.graph)
    if odd:
        witness = f"{ctx.graph.label(odd[0])} degree {degree(ctx.graph, odd[0])}"
    else:
        witness = "edges span more than one component"
    return passed(False, witness)


def prop_2_9_outcome(ctx):
    """Popped size against (2^n - 2) + sum of multiplicities at the full-set vertex"""
    if not ctx.materializable:
        return _too_big(ctx)
    popped_size = ctx.popped_graph.edge_count()
    spread = eps_sum_at(ctx.graph, ctx.full_vertex)
    bound = ((1 << ctx.n) - 2) + spread
    return passed(
        popped_size <= bound,
        f"{popped_size} > {(1 << ctx.n) - 2} + {spread}",
        popped_size=popped_size,
        eps_sum=spread,
        bound=bound,
        strict=popped_size < bound,
    )


def check_prop_proof_values(ctx):
    if not ctx.fibonacci or ctx.n not in (2, 3):
        return not_applicable("worked values exist for n = 2 and n = 3 only")
    popped_size = ctx.popped_graph.edge_count()
    spread = eps_sum_at(ctx.graph, ctx.full_vertex)
    deleted = vertex_deleted_size(ctx.popped_graph, ctx.full_vertex)
    if ctx.n == 2:
        ok = popped_size == 3 and 2 + spread == 5
        witness = f"popped size {popped_size} (expected 3), bound {2 + spread} (expected 5)"
    else:
        ok = spread == 15 and deleted == 13
        witness = f"eps sum {spread} (expected 15), vertex-deleted size {deleted} (expected 13)"
    return passed(ok, witness, popped_size=popped_size, eps_sum=spread, vertex_deleted_size=deleted)


def check_golden_n3(ctx):
    if not ctx.fibonacci or ctx.n != 3:
        return not_applicable("the golden drawing is the n = 3 graph")
    g = ctx.graph
    keys = [(meta.label.s, meta.label.i) for meta in g.vertex_meta]
    for u in range(g.order):
        for v in range(u + 1, g.order):
            drawn = GOLDEN_N3_INCLUSIVE_EDGES.get((keys[u], keys[v]), 0)
            got = int(g.eps[u, v])
            if got != drawn:
                return passed(False, f"eps({g.label(u)}, {g.label(v)}) = {got}, drawn {drawn}")
    for v in range(g.order):
        drawn = GOLDEN_N3_LOOPS.get(keys[v], 0)
        if int(g.loops[v]) != drawn:
            return passed(False, f"l({g.label(v)}) = {int(g.loops[v])}, drawn {drawn}")
    return passed(True, None, edges=sum(GOLDEN_N3_INCLUSIVE_EDGES.values()), loops=sum(GOLDEN_N3_LOOPS.values()))


def check_sum_graph_bipartite(ctx):
    if not ctx.fibonacci or ctx.n < 2:
        return not_applicable("chromatic number 2 is claimed for n >= 2 with Fibonacci sums")
    graph = gen_fib_sum_graph(ctx.n, ctx.seq)
    ok = is_bipartite(graph) and graph.edge_count() > 0
    return passed(ok, "sum graph contains an odd cycle", chromatic_number=2 if ok else None)


def check_popped_not_bipartite(ctx):
    if ctx.n < 2:
        return not_applicable("a single vertex is 2-colourable")
    if not ctx.materializable:
        return _too_big(ctx)
    return passed(not is_bipartite(ctx.popped_graph), "popped graph admits a 2-colouring")


def check_doubling(ctx):
    if ctx.n < 2:
        return not_applicable("the doubling step starts from n = 1")
    if not ctx.materializable:
        return _too_big(ctx)
    previous = gen_fib_sum_set_graph(ctx.n - 1, ctx.seq, ctx.semantics, cap=ctx.settings.max_n)
    try:
        gen_doubling_step(previous, ctx.n - 1, ctx.seq, ctx.semantics)
    except ConsistencyError as e:
        return passed(False, str(e))
    return passed(True, None)


@dataclass(frozen=True)
class Expectation:
    """Semantics (and optionally the n range) under which a claim must pass"""

    semantics: frozenset = frozenset(EdgeSemantics)
    max_n: Optional[int] = None

    def requires_pass(self, n, semantics, sequence_kind):
        if SequenceKind(sequence_kind) is not SequenceKind.FIBONACCI:
            return False
        if self.max_n is not None and n > self.max_n:
            return False
        return EdgeSemantics(semantics) in self.semantics


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    check: Callable[[ClaimContext], ClaimOutcome]
    expectation: Expectation = Expectation()


_STRICT_ONLY = Expectation(frozenset({EdgeSemantics.STRICT}))
_INCLUSIVE_ONLY = Expectation(frozenset({EdgeSemantics.INCLUSIVE}))

# Order matters: reports are merged in this order
REGISTRY = (
    Claim("ORDER_SIZE_CHAIN", "orders and sizes grow from sum graph to set-graphs, equal only at n=1",
          check_order_size_chain),
    Claim("THM_2_1", "no pendant vertices", check_no_pendant),
    Claim("COR_2_2", "connected", check_connected),
    Claim("COR_2_3", "popped graph has a Hamiltonian cycle", check_hamiltonian),
    Claim("LEM_2_4", "full set is the unique vertex with the most loops", check_unique_max_loop),
    Claim("THM_2_5", "loops at the full set match the closed-form edge count", check_closed_form),
    Claim("THM_2_6", "every loop value of the prefix sum graphs occurs", check_loop_coverage),
    Claim("THM_2_7", "all vertex degrees are even", check_even_degrees, _STRICT_ONLY),
    Claim("COR_2_8", "Eulerian", check_eulerian, _STRICT_ONLY),
    # fails from n = 4 on (strict n=4: 92 > 14 + 42)
    Claim("PROP_2_9", "popped size <= (2^n - 2) + multiplicity sum at the full set",
          prop_2_9_outcome, Expectation(max_n=3)),
    Claim("PROP_2_9_PROOF_VALUES", "worked values 3 < 5 (n=2), 15 and 13 (n=3)",
          check_prop_proof_values, _INCLUSIVE_ONLY),
    Claim("FIG_2_GOLDEN", "n=3 multiplicities and loops match the drawing", check_golden_n3,
          _INCLUSIVE_ONLY),
    Claim("CHI_FIB_SUM", "the sum graph has chromatic number 2", check_sum_graph_bipartite),
    Claim("POPPED_NOT_BIPARTITE", "the popped graph is not 2-colourable", check_popped_not_bipartite),
    Claim("DOUBLING", "doubling construction equals direct generation", check_doubling),
)

CLAIMS_BY_ID = {claim.claim_id: claim for claim in REGISTRY}