"""
Exact exponential solvers on the popped graph: Hamiltonian cycle, clique number,
eared clique number and chromatic number

Every solver takes a node-expansion budget and answers with a three-valued
result; a witness is checked against the graph before it is handed back.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from fibsetgraph.analysis.invariants import is_connected
from fibsetgraph.errors import ConsistencyError, DomainError
from fibsetgraph.graphcore.graphs import iter_bits, popped


class Outcome(str, Enum):
    COMPUTED = "computed"
    UNKNOWN = "unknown"


class CycleOutcome(str, Enum):
    FOUND = "found"
    NONE = "none"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SolverResult:
    outcome: Outcome
    value: Optional[int]
    witness: tuple
    expansions: int

    @property
    def known(self):
        return self.outcome is Outcome.COMPUTED


@dataclass(frozen=True)
class HamiltonianResult:
    outcome: CycleOutcome
    cycle: tuple
    expansions: int


class _BudgetExhausted(Exception):
    pass


class _Budget:
    def __init__(self, limit):
        if limit <= 0:
            raise DomainError(f"budget must be positive, got {limit}")
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise _BudgetExhausted


# Hamiltonian cycle

def _viable(adjacency, free, end):
    """Every unvisited vertex keeps two usable neighbours (unvisited, the path end or vertex 0)"""
    if not free:
        return bool(adjacency[end] & 1)
    reachable = free | (1 << end) | 1
    return all((adjacency[u] & reachable).bit_count() >= 2 for u in iter_bits(free))


def _candidates(adjacency, full, end, visited):
    free = full & ~visited
    options = list(iter_bits(adjacency[end] & free))
    options.sort(key=lambda v: ((adjacency[v] & free).bit_count(), v))
    return iter(options)


def verify_cycle(graph, cycle):
    """True iff `cycle` visits every vertex once and consecutive vertices are adjacent"""
    if sorted(cycle) != list(range(graph.order)):
        return False
    if graph.order == 1:
        return True
    closed = list(cycle) + [cycle[0]]
    return all(graph.has_edge(u, v) for u, v in zip(closed, closed[1:]))


def hamiltonian_cycle(g, budget):
    """
    Backtracking search for a Hamiltonian cycle with degree pruning

    Candidates are tried fewest-onward-options first; a branch is cut as soon as
    some unvisited vertex is left with fewer than two usable neighbours.
    K_1 counts as Hamiltonian with the trivial cycle (0,).

    Args:
        g (SimpleGraph | MultiGraph): The graph (popped first)
        budget (int): Maximum number of node expansions (> 0)

    Returns:
        HamiltonianResult: found (with a verified cycle), none, or unknown
    """
    counter = _Budget(budget)
    simple = popped(g)
    n = simple.order
    adjacency = simple.adjacency
    if n == 1:
        return HamiltonianResult(CycleOutcome.FOUND, (0,), 0)
    if n < 3 or any(mask.bit_count() < 2 for mask in adjacency) or not is_connected(simple):
        return HamiltonianResult(CycleOutcome.NONE, (), 0)

    full = (1 << n) - 1
    path = [0]
    visited = 1
    frames = [_candidates(adjacency, full, 0, visited)]
    try:
        while frames:
            v = next(frames[-1], None)
            if v is None:
                frames.pop()
                visited &= ~(1 << path.pop())
                continue
            counter.spend()
            grown = visited | (1 << v)
            if grown == full:
                if adjacency[v] & 1:
                    path.append(v)
                    break
                continue
            if not _viable(adjacency, full & ~grown, v):
                continue
            path.append(v)
            visited = grown
            frames.append(_candidates(adjacency, full, v, visited))
        else:
            return HamiltonianResult(CycleOutcome.NONE, (), counter.used)
    except _BudgetExhausted:
        return HamiltonianResult(CycleOutcome.UNKNOWN, (), counter.limit)

    cycle = tuple(path)
    if not verify_cycle(simple, cycle):
        raise ConsistencyError(f"search returned an invalid Hamiltonian cycle {cycle}")
    return HamiltonianResult(CycleOutcome.FOUND, cycle, counter.used)


# Cliques

def is_clique(graph, vertices):
    vertices = list(vertices)
    return all(graph.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:])


def _max_clique(adjacency, n, counter, best):
    """Bron-Kerbosch with pivoting and a size bound; `best` is [size, mask]"""

    def expand(clique, clique_size, candidates, excluded):
        counter.spend()
        if not candidates:
            if clique_size > best[0]:
                best[0], best[1] = clique_size, clique
            return
        if clique_size + candidates.bit_count() <= best[0]:
            return
        pivot = max(
            iter_bits(candidates | excluded),
            key=lambda u: ((candidates & adjacency[u]).bit_count(), -u),
        )
        for v in iter_bits(candidates & ~adjacency[pivot]):
            bit = 1 << v
            expand(clique | bit, clique_size + 1, candidates & adjacency[v], excluded & adjacency[v])
            candidates &= ~bit
            excluded |= bit
            if clique_size + candidates.bit_count() <= best[0]:
                return

    expand(0, 0, (1 << n) - 1, 0)


def _clique_search(simple, counter):
    best = [1, 1] if simple.order else [0, 0]
    try:
        _max_clique(simple.adjacency, simple.order, counter, best)
    except _BudgetExhausted:
        return False, best
    return True, best


def clique_number(g, budget):
    """
    Exact clique number of the popped graph

    Args:
        g (SimpleGraph | MultiGraph): The graph
        budget (int): Maximum number of node expansions (> 0)

    Returns:
        SolverResult: omega with a verified maximum clique, or unknown with the
            largest clique seen so far as witness
    """
    counter = _Budget(budget)
    simple = popped(g)
    done, (best_size, best_mask) = _clique_search(simple, counter)
    witness = tuple(iter_bits(best_mask))
    if not is_clique(simple, witness):
        raise ConsistencyError(f"clique search returned a non-clique {witness}")
    if not done:
        return SolverResult(Outcome.UNKNOWN, None, witness, counter.limit)
    return SolverResult(Outcome.COMPUTED, best_size, witness, counter.used)


def eared_clique_number(g, budget):
    """Order of a largest eared clique, i.e. the clique number of the popped graph"""
    return clique_number(popped(g), budget)


# Colouring

def is_proper_colouring(graph, colours):
    if len(colours) != graph.order or any(c < 0 for c in colours):
        return False
    return all(colours[u] != colours[v] for u, v in graph.edges())


def greedy_colouring(g):
    """
    DSATUR greedy colouring: repeatedly colour the most saturated vertex

    Returns:
        tuple: Colour per vertex (an upper bound on the chromatic number)
    """
    simple = popped(g)
    n = simple.order
    adjacency = simple.adjacency
    colours = [-1] * n
    forbidden = [0] * n
    uncoloured = set(range(n))
    while uncoloured:
        v = max(uncoloured, key=lambda u: (forbidden[u].bit_count(), adjacency[u].bit_count(), -u))
        c = (~forbidden[v] & (forbidden[v] + 1)).bit_length() - 1
        colours[v] = c
        uncoloured.remove(v)
        for u in iter_bits(adjacency[v]):
            forbidden[u] |= 1 << c
    return tuple(colours)


def _k_colouring(simple, k, counter):
    """DSATUR-ordered backtracking for a proper colouring with at most k colours"""
    n = simple.order
    adjacency = simple.adjacency
    degree = [mask.bit_count() for mask in adjacency]
    colours = [-1] * n
    forbidden = [0] * n

    def pick():
        best = -1
        best_key = None
        for v in range(n):
            if colours[v] != -1:
                continue
            key = (forbidden[v].bit_count(), degree[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(coloured, used):
        counter.spend()
        if coloured == n:
            return True
        v = pick()
        # a new colour is only ever the next unused one
        options = ~forbidden[v] & ((1 << min(k, used + 1)) - 1)
        for c in iter_bits(options):
            colours[v] = c
            changed = []
            for u in iter_bits(adjacency[v]):
                if colours[u] == -1 and not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    changed.append(u)
            if solve(coloured + 1, max(used, c + 1)):
                return True
            for u in changed:
                forbidden[u] &= ~(1 << c)
        colours[v] = -1
        return False

    if solve(0, 0):
        return tuple(colours)
    return None


def chromatic_number(g, budget):
    """
    Exact chromatic number of the popped graph

    The clique number gives the lower bound and DSATUR greedy the upper bound;
    k-colourability is then tested for k = lower, lower+1, ... below the upper
    bound. Clique search and colouring share one budget.

    Args:
        g (SimpleGraph | MultiGraph): The graph
        budget (int): Maximum number of node expansions (> 0)

    Returns:
        SolverResult: chi with a verified colouring, or unknown
    """
    counter = _Budget(budget)
    simple = popped(g)
    if simple.order == 0:
        return SolverResult(Outcome.COMPUTED, 0, (), 0)

    upper_colouring = greedy_colouring(simple)
    upper = max(upper_colouring) + 1
    _, (lower, _) = _clique_search(simple, counter)
    try:
        for k in range(max(lower, 1), upper):
            colouring = _k_colouring(simple, k, counter)
            if colouring is not None:
                if not is_proper_colouring(simple, colouring):
                    raise ConsistencyError(f"{k}-colouring search returned an improper colouring")
                return SolverResult(Outcome.COMPUTED, k, colouring, counter.used)
    except _BudgetExhausted:
        return SolverResult(Outcome.UNKNOWN, None, upper_colouring, counter.limit)
    # every k below the greedy bound was refuted, or a clique already matches it
    if not is_proper_colouring(simple, upper_colouring):
        raise ConsistencyError("greedy colouring is improper")
    return SolverResult(Outcome.COMPUTED, upper, upper_colouring, min(counter.used, counter.limit))
