"""Independent partition counters used to cross-check the DP.

Two routes, deliberately sharing no machinery with :mod:`tripart.lexdp`:

* ``count_brute`` -- plain backtracking over vertex sets, no bitmasks, no
  memoization.  Exponential, fine up to a dozen or so vertices.
* ``count_ie`` -- inclusion-exclusion: with q = n/3 and a(S) the number of
  triangles inside S, the sum over all subsets S of (-1)^(n-|S|) a(S)^q
  equals the number of ordered q-tuples of triangles whose union is V.
  Such a tuple covers all n = 3q vertices with q triples of 3, so the
  triples cannot overlap anywhere: every tuple counted is a partition in
  some order, and dividing by q! gives the partition count.  The division
  is checked, not assumed.

The IE sum runs in one of two modes: ``tabulated`` builds the a(S) table
over all 2^n subsets by a least-bit recurrence (fast, 2^n memory),
``poly-space`` recomputes a(S) per subset (slow, polynomial memory).
"""
from __future__ import annotations

from array import array
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from math import factorial

from .graphs import CapacityError, Graph, triangle_count_within

IE_MODES = ("tabulated", "poly-space")

TABULATED_MAX_N = 26  # two 2^26-entry uint32 tables ~= 0.5 GiB; refuse beyond


def enumerate_partitions(g: Graph, limit: int | None = None) -> list[tuple[tuple[int, int, int], ...]]:
    """Up to ``limit`` triangle partitions, each a lex-sorted triple tuple.

    Backtracking on the smallest uncovered vertex with candidate pairs
    tried in ascending order, so output order is lexicographic on the
    triple sequences.  Tracks covered vertices in a plain set; kept free
    of bitmask tricks on purpose, this is the reference the clever code
    is judged against.
    """
    out: list[tuple[tuple[int, int, int], ...]] = []
    if g.n % 3:
        return out
    covered: set[int] = set()
    stack: list[tuple[int, int, int]] = []

    def rec() -> bool:
        if limit is not None and len(out) >= limit:
            return False
        if len(covered) == g.n:
            out.append(tuple(stack))
            return limit is None or len(out) < limit
        a = min(v for v in range(1, g.n + 1) if v not in covered)
        rest = [v for v in range(a + 1, g.n + 1)
                if v not in covered and g.has_edge(a, v)]
        for i, u in enumerate(rest):
            for v in rest[i + 1:]:
                if not g.has_edge(u, v):
                    continue
                covered.update((a, u, v))
                stack.append((a, u, v))
                more = rec()
                stack.pop()
                covered.difference_update((a, u, v))
                if not more:
                    return False
        return True

    rec()
    return out


def count_brute(g: Graph) -> int:
    """Partition count by exhaustive backtracking. Intended for n <= 15."""
    return len(enumerate_partitions(g))


def ie_term(g: Graph, subset: int, q: int) -> int:
    """One signed IE term: (-1)^(n-|S|) * a(S)^q for the subset mask."""
    a = triangle_count_within(g, subset)
    sign = -1 if (g.n - subset.bit_count()) % 2 else 1
    return sign * a ** q


def triangle_table(g: Graph) -> array:
    """a(S) for every subset mask S, as a uint32 array of length 2^n.

    Peels the least significant vertex v of S:  a(S) = a(S - v) plus the
    number of edges of S - v inside adj(v), where the edge counts e(S)
    satisfy the same kind of recurrence.  Both tables are filled in one
    pass in mask order, so each entry's predecessor is already done.
    """
    if g.n > TABULATED_MAX_N:
        raise CapacityError(f"tabulated mode supports n <= {TABULATED_MAX_N}")
    size = 1 << g.n
    e = array("I", bytes(4 * size))
    a = array("I", bytes(4 * size))
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        nb = g.adj[low.bit_length()] & rest
        e[s] = e[rest] + nb.bit_count()
        a[s] = a[rest] + e[nb]
    return a


def _ie_sum_tabulated(g: Graph, threads: int) -> int:
    a = triangle_table(g)
    q = g.n // 3
    n = g.n
    size = 1 << n

    def partial(lo: int, hi: int) -> int:
        acc = 0
        for s in range(lo, hi):
            term = a[s] ** q
            if (n - s.bit_count()) % 2:
                acc -= term
            else:
                acc += term
        return acc

    if threads <= 1:
        return partial(0, size)
    # disjoint contiguous ranges, combined by exact addition: bit-identical
    # to the sequential sweep no matter how the work interleaves
    bounds = [size * i // threads for i in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(partial, bounds[:-1], bounds[1:]))


def _ie_sum_poly_space(g: Graph) -> int:
    q = g.n // 3
    total = 0
    for s in range(1 << g.n):
        total += ie_term(g, s, q)
    return total


def count_ie(g: Graph, mode: str = "tabulated", threads: int = 1) -> int:
    """Partition count by inclusion-exclusion over vertex subsets.

    ``mode`` selects ``tabulated`` or ``poly-space``; ``threads`` splits
    the tabulated sweep into contiguous mask ranges.  The signed sum must
    come out divisible by q! and nonnegative; anything else is an
    implementation bug and raises.
    """
    mode = mode.replace("_", "-")
    if mode not in IE_MODES:
        raise ValueError(f"unknown IE mode {mode!r}")
    if g.n % 3:
        return 0
    if g.n == 0:
        return 1  # the empty partition
    if mode == "tabulated":
        signed = _ie_sum_tabulated(g, threads)
    else:
        signed = _ie_sum_poly_space(g)
    if signed < 0:
        raise RuntimeError(f"IE sum {signed} is negative -- counting bug")
    q = g.n // 3
    quot, rem = divmod(signed, factorial(q))
    if rem:
        raise RuntimeError(
            f"IE sum {signed} is not divisible by {q}! -- counting bug")
    return quot


def ie_terms_by_size(g: Graph) -> dict[int, int]:
    """Signed IE contribution aggregated by subset size, for auditing."""
    q = g.n // 3
    verts = range(1, g.n + 1)
    out: dict[int, int] = {}
    for k in range(g.n + 1):
        out[k] = sum(ie_term(g, sum(1 << (v - 1) for v in pick), q)
                     for pick in combinations(verts, k))
    return out
