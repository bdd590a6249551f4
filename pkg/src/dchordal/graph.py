"""Simple undirected graphs on dense integer vertices.

A :class:`Graph` is immutable. Vertices are ``0 .. n-1`` and every vertex
carries a sorted tuple of neighbours, so neighbourhood set operations are
cheap and iteration order is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import LoopEdge, TooLarge

COMPLEMENT_LIMIT = 4096


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def nbrs(self) -> tuple[frozenset, ...]:
        """Open neighbourhoods as frozensets."""
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as integer bitmasks (bit ``u`` set iff ``u`` is a neighbour)."""
        out = []
        for a in self.adj:
            mask = 0
            for u in a:
                mask |= 1 << u
            out.append(mask)
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbrs[u]

    def closed(self, v: int) -> frozenset:
        return self.nbrs[v] | {v}

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, a in enumerate(self.adj):
            for v in a:
                if v > u:
                    yield u, v

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices. Duplicate edges collapse; loops raise :class:`LoopEdge`."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n = {n}")
        if u == v:
            raise LoopEdge(u)
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in sets))


def check_graph(G: Graph) -> None:
    """Raise ``ValueError`` if ``G`` breaks the simple-graph invariants."""
    for v, a in enumerate(G.adj):
        if list(a) != sorted(set(a)):
            raise ValueError(f"neighbours of {v} not sorted or duplicated")
        for u in a:
            if u == v:
                raise LoopEdge(v)
            if not 0 <= u < G.n:
                raise ValueError(f"neighbour {u} of {v} out of range")
            if v not in G.nbrs[u]:
                raise ValueError(f"asymmetric edge ({v}, {u})")


def components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(sorted(comp))
    return out


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return False
    seen = bytearray(G.n)
    seen[0] = 1
    stack = [0]
    count = 1
    adj = G.adj
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = 1
                count += 1
                stack.append(u)
    return count == G.n


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(G[S], index_map)`` where ``index_map[i]`` is the original id of new vertex ``i``.

    New ids follow the increasing order of the original ids.
    """
    index_map = sorted(set(S))
    pos = {v: i for i, v in enumerate(index_map)}
    adj = []
    for v in index_map:
        adj.append(tuple(pos[u] for u in G.adj[v] if u in pos))
    return Graph(len(index_map), tuple(adj)), index_map


def complement(G: Graph) -> Graph:
    if G.n > COMPLEMENT_LIMIT:
        raise TooLarge(G.n, COMPLEMENT_LIMIT, "complement")
    adj = []
    for v in range(G.n):
        nb = G.nbrs[v]
        adj.append(tuple(u for u in range(G.n) if u != v and u not in nb))
    return Graph(G.n, tuple(adj))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``perm[v]``."""
    return from_edges(G.n, ((perm[u], perm[v]) for u, v in G.edges()))


# Small named graphs used throughout tests and demos.

def empty(n: int) -> Graph:
    return from_edges(n, [])


def complete(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def wheel(k: int) -> Graph:
    """Rim ``0 .. k-1`` forming a C_k, hub ``k`` adjacent to the whole rim."""
    rim = [(i, (i + 1) % k) for i in range(k)]
    return from_edges(k + 1, rim + [(i, k) for i in range(k)])


def diamond() -> Graph:
    """K4 minus the edge 0-3; the mid-edge is 1-2."""
    return from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def complete_multipartite(*sizes: int) -> Graph:
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    n = len(part)
    return from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    shift = G.n
    return from_edges(G.n + H.n, list(G.edges()) + [(u + shift, v + shift) for u, v in H.edges()])
