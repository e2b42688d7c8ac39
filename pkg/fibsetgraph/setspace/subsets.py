"""
Subset enumeration, lexicographic ranking/unranking and dense vertex indices

A subset of {1..n} is a bitmask with bit j set iff j is a member (bit 0 unused).
Vertices are enumerated by cardinality s, then by the lexicographic rank i of
the sorted element tuple among s-element subsets.
"""
from dataclasses import dataclass
from itertools import combinations
from math import comb

from fibsetgraph.config import MATERIALIZATION_LIMIT
from fibsetgraph.errors import CapacityError, DomainError


@dataclass(frozen=True, order=True)
class VertexLabel:
    s: int
    i: int

    def __str__(self):
        return f"v_{{{self.s},{self.i}}}"


@dataclass(frozen=True)
class SubsetId:
    mask: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"ground set size must be >= 1, got {self.n}")
        if self.mask <= 0 or self.mask & 1 or self.mask >> (self.n + 1):
            raise DomainError(f"mask {self.mask:#b} is not a non-empty subset of 1..{self.n}")

    @property
    def elements(self):
        return tuple(j for j in range(1, self.n + 1) if self.mask >> j & 1)

    @property
    def size(self):
        return self.mask.bit_count()

    @property
    def label(self):
        return label_of(self)

    def __str__(self):
        return "{" + ",".join(str(e) for e in self.elements) + "}"


def subset_from_elements(elements, n):
    """Builds a SubsetId from an iterable of integers in 1..n"""
    mask = 0
    for e in elements:
        if not 1 <= e <= n:
            raise DomainError(f"element {e} is outside 1..{n}")
        mask |= 1 << e
    return SubsetId(mask, n)


def subset_count(n):
    """Number of non-empty subsets of {1..n}, without enumerating them"""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return (1 << n) - 1


def iter_subsets(n):
    """
    Lazily yields every non-empty subset of {1..n} in vertex order

    Args:
        n (int): Ground-set size (>= 1); no cap is applied

    Yields:
        SubsetId: Subsets ordered by (s ascending, rank ascending)
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    for s in range(1, n + 1):
        for combo in combinations(range(1, n + 1), s):
            mask = 0
            for e in combo:
                mask |= 1 << e
            yield SubsetId(mask, n)


def enumerate_subsets(n, cap=MATERIALIZATION_LIMIT):
    """
    Materializes all 2^n - 1 non-empty subsets of {1..n}

    Args:
        n (int): Ground-set size
        cap (int): Largest n allowed to materialize

    Returns:
        list: SubsetId objects in vertex order
    """
    if n > cap:
        raise CapacityError(f"n={n} exceeds the materialization cap {cap}")
    return list(iter_subsets(n))


def label_of(subset):
    """
    Computes the (s, i) label of a subset

    Args:
        subset (SubsetId): A valid subset

    Returns:
        VertexLabel: s = cardinality, i = 1 + number of lexicographically smaller s-subsets
    """
    n = subset.n
    elements = subset.elements
    s = len(elements)
    rank = 0
    prev = 0
    for pos, e in enumerate(elements):
        for x in range(prev + 1, e):
            rank += comb(n - x, s - pos - 1)
        prev = e
    return VertexLabel(s, rank + 1)


def subset_of(s, i, n):
    """
    Inverse of label_of: the i-th s-element subset of {1..n}

    Args:
        s (int): Cardinality, 1 <= s <= n
        i (int): 1-based lexicographic rank, 1 <= i <= C(n, s)
        n (int): Ground-set size

    Returns:
        SubsetId: The unique subset labelled (s, i)
    """
    if n < 1 or not 1 <= s <= n:
        raise DomainError(f"cardinality {s} is outside 1..{n}")
    if not 1 <= i <= comb(n, s):
        raise DomainError(f"rank {i} is outside 1..{comb(n, s)} for s={s}, n={n}")
    rank = i - 1
    mask = 0
    x = 1
    for pos in range(s):
        while True:
            block = comb(n - x, s - pos - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        mask |= 1 << x
        x += 1
    return SubsetId(mask, n)


def index_of(subset):
    """Dense vertex index of a subset in enumeration order (0-based)"""
    label = label_of(subset)
    return sum(comb(subset.n, t) for t in range(1, label.s)) + label.i - 1


def full_set(n):
    """The whole ground set {1..n}, labelled (n, 1)"""
    return SubsetId(((1 << n) - 1) << 1, n)
