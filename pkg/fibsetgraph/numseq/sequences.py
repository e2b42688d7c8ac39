"""
Sum sequences and the Fibonacci index arithmetic behind the edge-count formula
"""
import bisect
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor

from fibsetgraph.errors import BoundError, ConsistencyError, DomainError


class SequenceKind(str, Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    CUSTOM = "custom"


@dataclass(frozen=True)
class SumSequence:
    """Admissible pair-sums, certified up to `bound`"""

    kind: SequenceKind
    members: tuple
    bound: int


@dataclass(frozen=True)
class FibIndex:
    k: int
    n: int


def fib_upto(limit):
    """
    Lists the Fibonacci numbers up to a limit, starting from f_0

    Args:
        limit (int): Largest value to include (>= 1)

    Returns:
        tuple: (0, 1, 1, 2, 3, ...) with the repeated 1 kept
    """
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    values = [0, 1]
    while values[-1] + values[-2] <= limit:
        values.append(values[-1] + values[-2])
    return tuple(values)


def lucas_upto(limit):
    """
    Lists the Lucas numbers up to a limit, starting from L_0 = 2, L_1 = 1

    Args:
        limit (int): Largest value to include (>= 1)

    Returns:
        tuple: Lucas values <= limit in generation order
    """
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    values = [2, 1]
    while values[-1] + values[-2] <= limit:
        values.append(values[-1] + values[-2])
    return tuple(v for v in values if v <= limit)


def _members(values):
    return tuple(sorted({v for v in values if v >= 1}))


def fibonacci_sequence(bound):
    """Fibonacci SumSequence certified up to `bound`"""
    return SumSequence(SequenceKind.FIBONACCI, _members(fib_upto(bound)), bound)


def lucas_sequence(bound):
    """Lucas SumSequence certified up to `bound`"""
    return SumSequence(SequenceKind.LUCAS, _members(lucas_upto(bound)), bound)


def custom_sequence(values, bound):
    """
    Wraps an arbitrary set of positive integers as a SumSequence

    Args:
        values (iterable): Candidate members; values above `bound` are dropped
        bound (int): Largest sum the caller vouches for

    Returns:
        SumSequence: Custom-kind sequence
    """
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    values = list(values)
    if any(v < 1 for v in values):
        raise DomainError("custom sequence members must be positive integers")
    return SumSequence(SequenceKind.CUSTOM, _members(v for v in values if v <= bound), bound)


def sequence_for(kind, bound):
    """Builds a Fibonacci or Lucas sequence by kind name"""
    kind = SequenceKind(kind)
    if kind is SequenceKind.FIBONACCI:
        return fibonacci_sequence(bound)
    if kind is SequenceKind.LUCAS:
        return lucas_sequence(bound)
    raise DomainError("custom sequences need explicit members; use custom_sequence()")


def ensure_bound(seq, needed):
    """
    Returns a sequence able to certify sums up to `needed`

    Fibonacci and Lucas sequences are regenerated; custom ones cannot grow.
    """
    if seq is None:
        return fibonacci_sequence(max(needed, 1))
    if seq.bound >= needed:
        return seq
    if seq.kind is SequenceKind.CUSTOM:
        raise BoundError(f"custom sequence bound {seq.bound} is below the required {needed}")
    return sequence_for(seq.kind, needed)


def is_sum_member(x, seq):
    """
    Tests whether x belongs to the sequence

    Args:
        x (int): Candidate sum, 1 <= x <= seq.bound
        seq (SumSequence): Sequence to query

    Returns:
        bool: True iff x is a member
    """
    if x < 1:
        raise DomainError(f"sums are positive integers, got {x}")
    if x > seq.bound:
        raise BoundError(f"{x} exceeds sequence bound {seq.bound}; extend the sequence first")
    pos = bisect.bisect_left(seq.members, x)
    return pos < len(seq.members) and seq.members[pos] == x


@lru_cache(maxsize=None)
def fib(k):
    """f_k under the canonical indexing f_0 = 0, f_1 = f_2 = 1"""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fib_index(n):
    """
    Finds the largest k >= 2 with f_k <= n

    Args:
        n (int): Positive integer

    Returns:
        FibIndex: k together with n, so that f_k <= n <= f_{k+1}
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    k = 2
    while fib(k + 1) <= n:
        k += 1
    return FibIndex(k=k, n=n)


def closed_form_edge_count(n):
    """
    Number of pairs {i, j} of distinct integers in 1..n whose sum is Fibonacci

    Uses the two-case closed form with k = fib_index(n).k; the same value is the
    loop count of the vertex holding the full ground set.

    Args:
        n (int): Ground-set size (>= 1)

    Returns:
        int: Edge count of the Fibonacci-sum graph on 1..n
    """
    k = fib_index(n).k
    fk, fk2 = fib(k), fib(k + 2)
    shift = Fraction(fk + 1, 2) - Fraction(floor(Fraction(4 * (k + 1), 3)), 2)
    if 2 * n <= fk2:
        value = n + shift
    else:
        value = 2 * n + shift - ceil(Fraction(fk2 - 1, 2))
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"edge-count formula gave {value} for n={n}, k={k}")
    return int(value)


def pair_sum_count(n, seq=None):
    """
    Brute-force count of pairs {i, j} in 1..n, i < j, with i + j in the sequence

    Args:
        n (int): Ground-set size (>= 1)
        seq (SumSequence): Defaults to Fibonacci; extended to bound 2n when possible

    Returns:
        int: Number of admissible pairs
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    seq = ensure_bound(seq, 2 * n)
    members = set(seq.members)
    return sum(1 for i in range(1, n + 1) for j in range(i + 1, n + 1) if i + j in members)


def excluded_values(values):
    """Integers in [0, max(values)] missing from a list of loop values"""
    present = set(values)
    return tuple(v for v in range(0, max(present, default=0) + 1) if v not in present)
