"""Bitmask graphs: DIMACS I/O, deterministic generators, triangle primitives.

Vertices carry 1-based labels 1..n with n <= 63.  Every vertex set in this
package is a plain Python int in which bit (v - 1) stands for vertex v, so
set algebra happens in single machine words.  Graphs are immutable once
built and safe to share between threads.

The random families (``gnp``, ``planted``) draw their coin flips from
``random.Random(seed)`` -- the stdlib Mersenne Twister, whose ``random()``
sequence is guaranteed stable across platforms and Python releases -- with
one flip per candidate pair in row-major order (u < v, u ascending).  A
(family, n, p, seed) tuple therefore always names the same graph.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 63

FAMILIES = ("complete", "cycle", "prism", "disjoint_triangles", "gnp", "planted")


class GraphFormatError(ValueError):
    """Malformed graph input (bad DIMACS line, bad label, self-loop)."""


class CapacityError(ValueError):
    """Input exceeds a hard size guard (n > 63, or a table too big to build)."""


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based vertex labels."""
    out = 0
    for v in vertices:
        out |= 1 << (v - 1)
    return out


def vertices_of(mask: int) -> tuple[int, ...]:
    """Ascending 1-based labels of the vertices in a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 1..n with per-vertex neighbor masks.

    ``adj[v]`` is the neighbor mask of vertex v (slot 0 is unused padding);
    adjacency is symmetric and self-loop free, and ``m`` counts distinct
    edges.  Build through :meth:`from_edges`, which enforces all of that.
    """

    n: int
    adj: tuple[int, ...]
    m: int

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphFormatError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_VERTICES:
            raise CapacityError(
                f"n = {n} exceeds the {MAX_VERTICES}-vertex bitmask capacity")
        adj = [0] * (n + 1)
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(
                    f"edge ({u},{v}) has a label outside 1..{n}")
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        m = sum(a.bit_count() for a in adj) // 2
        return Graph(n=n, adj=tuple(adj), m=m)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> (v - 1)) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Distinct edges as (u, v) with u < v, in row-major order."""
        for u in range(1, self.n + 1):
            rest = self.adj[u] >> u  # neighbors labeled > u
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1


def parse_graph(text: str) -> Graph:
    """Parse a DIMACS edge-format graph.

    Accepts comment lines starting with "c", exactly one problem line
    "p edge <n> <m>", and edge lines "e <u> <v>".  Duplicate edges collapse
    silently; the declared m is not trusted (the parsed graph reports the
    distinct-edge count).  Self-loops, labels outside 1..n, and structural
    noise raise :class:`GraphFormatError`; n > 63 raises
    :class:`CapacityError`.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(
                    f"line {lineno}: expected 'p edge <n> <m>', got {line!r}")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: n and m must be integers") from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            if n > MAX_VERTICES:
                raise CapacityError(
                    f"line {lineno}: n = {n} exceeds the "
                    f"{MAX_VERTICES}-vertex bitmask capacity")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(
                    f"line {lineno}: edge before the problem line")
            if len(parts) != 3:
                raise GraphFormatError(
                    f"line {lineno}: expected 'e <u> <v>', got {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: edge endpoints must be integers") from None
            if u == v:
                raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(
                    f"line {lineno}: edge ({u},{v}) has a label outside 1..{n}")
            edges.append((u, v))
        else:
            raise GraphFormatError(
                f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphFormatError("missing problem line 'p edge <n> <m>'")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    """DIMACS text for a graph; edges emitted with u < v in ascending order."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def generate(family: str, n: int, p: float | None = None,
             seed: int | None = None) -> Graph:
    """Build a named graph family deterministically.

    ``gnp`` and ``planted`` require both ``p`` in [0, 1] and a ``seed``;
    the fixed families reject them.  ``planted`` lays down the triangles
    {3i+1, 3i+2, 3i+3} and then flips one coin per remaining pair, so its
    planted partition is present for every p and seed.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    randomized = family in ("gnp", "planted")
    if randomized:
        if p is None or not 0.0 <= p <= 1.0:
            raise ValueError(f"family {family!r} needs p in [0, 1], got {p}")
        if seed is None:
            raise ValueError(f"family {family!r} needs an explicit seed")
    elif p is not None or seed is not None:
        raise ValueError(f"family {family!r} takes neither p nor seed")

    if family == "complete":
        edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    elif family == "cycle":
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    elif family == "prism":
        if n != 6:
            raise ValueError(f"prism is defined for n = 6 only, got {n}")
        edges = [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6),
                 (1, 4), (2, 5), (3, 6)]
    elif family == "disjoint_triangles":
        if n % 3:
            raise ValueError(f"disjoint_triangles needs 3 | n, got {n}")
        edges = _planted_base_edges(n)
    elif family == "gnp":
        rng = random.Random(seed)
        edges = [(u, v)
                 for u in range(1, n + 1) for v in range(u + 1, n + 1)
                 if rng.random() < p]
    else:  # planted
        if n % 3:
            raise ValueError(f"planted needs 3 | n, got {n}")
        base = _planted_base_edges(n)
        base_set = set(base)
        rng = random.Random(seed)
        edges = list(base)
        for u in range(1, n + 1):
            for v in range(u + 1, n + 1):
                if (u, v) not in base_set and rng.random() < p:
                    edges.append((u, v))
    return Graph.from_edges(n, edges)


def _planted_base_edges(n: int) -> list[tuple[int, int]]:
    edges = []
    for a in range(1, n + 1, 3):
        edges += [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
    return edges


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation; ``perm[v]`` is the new label of v (slot 0 unused)."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def is_triangle(g: Graph, a: int, b: int, c: int) -> bool:
    """True iff all three edges among the distinct vertices a, b, c are present."""
    return bool((g.adj[a] >> (b - 1)) & (g.adj[b] >> (c - 1))
                & (g.adj[a] >> (c - 1)) & 1)


def triangle_count_within(g: Graph, s: int) -> int:
    """Number of triangles of g with all three corners inside the mask s.

    Counts each triple once at its two smallest corners: for u < v adjacent
    inside s, add the common neighbors above v that lie in s.  The result
    fits 32 bits for any n <= 63 (at most C(63, 3) = 39711).
    """
    total = 0
    rest = s
    while rest:
        low = rest & -rest
        u = low.bit_length()
        rest ^= low
        higher = g.adj[u] & s & ~((1 << u) - 1)  # neighbors v > u inside s
        vm = higher
        while vm:
            vlow = vm & -vm
            v = vlow.bit_length()
            vm ^= vlow
            total += (g.adj[u] & g.adj[v] & s & ~((1 << v) - 1)).bit_count()
    return total


def edge_count_within(g: Graph, s: int) -> int:
    """Number of edges of g with both endpoints inside the mask s."""
    total = 0
    rest = s
    while rest:
        low = rest & -rest
        u = low.bit_length()
        rest ^= low
        total += (g.adj[u] & s & ~((1 << u) - 1)).bit_count()
    return total


@dataclass(frozen=True)
class Violation:
    """First failed clause of a partition check: which rule, and where."""

    kind: str  # "bad-label" | "not-a-triangle" | "overlap" | "incomplete-cover"
    triple: tuple[int, int, int] | None
    message: str


def validate_partition(g: Graph, triangles: Iterable[Sequence[int]]) -> Violation | None:
    """Check a claimed triangle partition against g.

    Returns None when the triples are pairwise disjoint, cover exactly
    {1..n}, and each induces a triangle; otherwise a :class:`Violation`
    naming the first broken rule and the offending triple.
    """
    covered = 0
    for raw in triangles:
        t = tuple(raw)
        if len(t) != 3 or len(set(t)) != 3:
            return Violation("bad-label", t if len(t) == 3 else None,
                             f"{t} is not a triple of three distinct vertices")
        if not all(1 <= v <= g.n for v in t):
            return Violation("bad-label", t,
                             f"{t} uses a label outside 1..{g.n}")
        a, b, c = sorted(t)
        if not is_triangle(g, a, b, c):
            return Violation("not-a-triangle", (a, b, c),
                             f"{(a, b, c)} is not a triangle of the graph")
        tm = mask_of((a, b, c))
        if covered & tm:
            shared = vertices_of(covered & tm)[0]
            return Violation("overlap", (a, b, c),
                             f"vertex {shared} appears in more than one triple")
        covered |= tm
    if covered != g.full_mask:
        missing = vertices_of(g.full_mask & ~covered)
        return Violation("incomplete-cover", None,
                         f"vertices {missing} are not covered")
    return None
