"""Lexicographic dynamic programming over covered-vertex states.

A partial solution is the set S of vertices covered by its first j
triangles.  Listing the triangles of any full partition in lexicographic
order forces the first j of them to contain {1..j}, so the only states
worth visiting are masks S with |S| = 3j and {1..j} included -- and the
next triangle must pick up the smallest uncovered vertex.  Each partition
corresponds to exactly one lexicographically sorted triangle sequence,
which is why path-counting over this state DAG counts partitions.

The decision search is a DFS that memoizes failed states and stops at the
first success, returning the lexicographically smallest witness; the
counter memoizes completion counts for the whole reachable DAG.  Counts
are exact Python ints.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


@dataclass
class DpStats:
    """Search-effort counters for one solver run.

    ``states_visited`` counts distinct states entered (the empty state
    included); ``transitions_explored`` counts candidate triangles
    examined, successful or not.  ``outcome`` records the run's result: a
    solvability flag for decision runs, the partition count for counting
    runs.
    """

    states_visited: int = 0
    transitions_explored: int = 0
    outcome: bool | int | None = None


def min_uncovered(covered: int, n: int) -> int:
    """Smallest vertex in 1..n whose bit is unset in ``covered``."""
    v = (~covered & (covered + 1)).bit_length()  # lowest zero bit, 1-based
    if v > n:
        raise ValueError("all vertices are covered")
    return v


def is_valid_state(covered: int) -> bool:
    """True iff |covered| = 3j and covered contains {1..j}."""
    size = covered.bit_count()
    if size % 3:
        return False
    prefix = (1 << (size // 3)) - 1
    return covered & prefix == prefix


def _expand(g: Graph, covered: int) -> tuple[list[tuple[tuple[int, int, int], int]], int]:
    """Successors of a non-full state, plus the number of candidates examined.

    Candidates are the pairs u < v of uncovered neighbors of the anchor
    (the smallest uncovered vertex); those that close a triangle become
    transitions, in ascending (u, v) order.
    """
    anchor = min_uncovered(covered, g.n)
    free = ~covered & g.full_mask
    pool = g.adj[anchor] & free
    anchor_bit = 1 << (anchor - 1)
    succ: list[tuple[tuple[int, int, int], int]] = []
    examined = 0
    um = pool
    while um:
        ulow = um & -um
        u = ulow.bit_length()
        um ^= ulow
        higher = pool & ~((1 << u) - 1)
        examined += higher.bit_count()
        vm = higher & g.adj[u]
        while vm:
            vlow = vm & -vm
            v = vlow.bit_length()
            vm ^= vlow
            nxt = covered | anchor_bit | ulow | vlow
            assert is_valid_state(nxt)  # every state entering a memo is valid
            succ.append(((anchor, u, v), nxt))
    return succ, examined


def lex_successors(g: Graph, covered: int) -> list[tuple[tuple[int, int, int], int]]:
    """All (triangle, next-state) moves from a valid, non-full state."""
    return _expand(g, covered)[0]


def solve_lex(g: Graph) -> tuple[tuple[tuple[int, int, int], ...] | None, DpStats]:
    """Find a triangle partition, or prove there is none.

    Depth-first over the state DAG in ascending successor order, memoizing
    dead states, so a success is the lexicographically smallest partition
    and a failure leaves every reachable state proven dead.  Graphs whose
    order is not a multiple of 3 are rejected before any search.
    """
    stats = DpStats()
    if g.n % 3:
        stats.states_visited = 1
        stats.outcome = False
        return None, stats

    full = g.full_mask
    dead: set[int] = set()
    chosen: list[tuple[int, int, int]] = []

    def dfs(covered: int) -> bool:
        stats.states_visited += 1
        if covered == full:
            return True
        succ, examined = _expand(g, covered)
        stats.transitions_explored += examined
        for tri, nxt in succ:
            if nxt in dead:
                continue
            chosen.append(tri)
            if dfs(nxt):
                return True
            chosen.pop()
        dead.add(covered)
        return False

    found = dfs(0)
    stats.outcome = found
    return (tuple(chosen) if found else None), stats


def count_lex(g: Graph) -> tuple[int, DpStats]:
    """Exact number of triangle partitions, by memoized path counting."""
    stats = DpStats()
    if g.n % 3:
        stats.states_visited = 1
        stats.outcome = 0
        return 0, stats

    full = g.full_mask
    memo: dict[int, int] = {}

    def ways(covered: int) -> int:
        hit = memo.get(covered)
        if hit is not None:
            return hit
        if covered == full:
            memo[covered] = 1
            return 1
        succ, examined = _expand(g, covered)
        stats.transitions_explored += examined
        total = 0
        for _tri, nxt in succ:
            total += ways(nxt)
        memo[covered] = total
        return total

    count = ways(0)
    stats.states_visited = len(memo)
    stats.outcome = count
    return count, stats
