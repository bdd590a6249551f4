"""Dually chordal recognition through maximum neighbourhood orderings.

A vertex ``u`` in the closed neighbourhood of ``v`` is a *maximum neighbour*
of ``v`` when ``N[w]`` is a subset of ``N[u]`` for every ``w`` in ``N[v]``.
An ordering ``v_1 .. v_n`` in which every ``v_i`` has a maximum neighbour in
the graph induced by ``v_i .. v_n`` certifies that the graph is dually
chordal. From such an ordering we derive a spanning tree ``T`` in which
every maximal clique induces a subtree, and we check that property
explicitly instead of trusting the construction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import Disconnected, NoCompatibleTree, TooLarge
from .graph import Graph, is_connected

log = logging.getLogger(__name__)

EXHAUSTIVE_MNO_LIMIT = 8
EXHAUSTIVE_TREE_LIMIT = 8


@dataclass(frozen=True)
class MaxNeighbourhoodOrdering:
    order: tuple[int, ...]
    witness: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class CompatibleTree:
    """Rooted spanning tree given by parent links; ``parent[root]`` is ``None``."""

    parent: tuple[Optional[int], ...]
    root: int
    route: str = "given"

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        depth: list[Optional[int]] = [None] * self.n
        depth[self.root] = 0
        for v in range(self.n):
            chain = []
            x = v
            while depth[x] is None:
                chain.append(x)
                x = self.parent[x]
                if x is None or len(chain) > self.n:
                    raise ValueError("parent links do not form a rooted tree")
            d = depth[x]
            for y in reversed(chain):
                d += 1
                depth[y] = d
        return tuple(depth)

    def edges(self) -> set[tuple[int, int]]:
        return {(min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p is not None}

    def has_edge(self, u: int, v: int) -> bool:
        return self.parent[u] == v or self.parent[v] == u

    def __eq__(self, other):
        if not isinstance(other, CompatibleTree):
            return NotImplemented
        return self.edges() == other.edges()

    def __hash__(self):
        return hash(frozenset(self.edges()))


@dataclass(frozen=True)
class TreeReport:
    spanning: bool
    cond3: bool
    cond2: bool
    clique_path: bool

    @property
    def ok(self) -> bool:
        return self.spanning and self.cond3 and self.cond2 and self.clique_path


def _alive_closed(G: Graph, v: int, alive) -> set[int]:
    s = {u for u in G.adj[v] if u in alive}
    s.add(v)
    return s


def maximum_neighbours(G: Graph, v: int, alive: Optional[Iterable[int]] = None) -> list[int]:
    """All maximum neighbours of ``v`` in ``G[alive]``, ascending; may include ``v``."""
    alive = set(range(G.n)) if alive is None else set(alive)
    if v not in alive:
        raise ValueError(f"vertex {v} is not alive")
    closed_v = _alive_closed(G, v, alive)
    closed = {w: _alive_closed(G, w, alive) for w in closed_v}
    return [u for u in sorted(closed_v) if all(closed[w] <= closed[u] for w in closed_v)]


def maximum_neighbour(G: Graph, v: int, alive: Optional[Iterable[int]] = None) -> Optional[int]:
    """Smallest maximum neighbour of ``v`` in ``G[alive]``, or ``None``.

    ``v`` itself is an admissible answer.
    """
    found = maximum_neighbours(G, v, alive)
    return found[0] if found else None


def is_mno(G: Graph, mno: MaxNeighbourhoodOrdering) -> bool:
    """Check that ``mno`` is a maximum neighbourhood ordering of ``G`` with valid witnesses."""
    if sorted(mno.order) != list(range(G.n)) or len(mno.witness) != G.n:
        return False
    alive = set(range(G.n))
    for v, u in zip(mno.order, mno.witness):
        closed_v = _alive_closed(G, v, alive)
        if u not in closed_v:
            return False
        cu = _alive_closed(G, u, alive)
        if not all(_alive_closed(G, w, alive) <= cu for w in closed_v):
            return False
        alive.discard(v)
    return True


def find_mno(G: Graph) -> Optional[MaxNeighbourhoodOrdering]:
    """Greedy elimination of vertices dominated by a maximum neighbour.

    Each step removes the smallest alive vertex ``v`` that has a maximum
    neighbour ``u != v`` (recording the smallest such ``u``). Only when no
    such vertex exists may a vertex that is its own sole maximum neighbour
    go; in a connected residual graph that happens only for the last one.
    Removing a universal vertex early, which "any vertex with a maximum
    neighbour" would allow, can turn a dually chordal residual graph into
    one without an ordering.

    Returns ``None`` when the process stalls. Raises :class:`Disconnected`
    for disconnected input.
    """
    if not is_connected(G):
        raise Disconnected("find_mno")
    alive = set(range(G.n))
    order, witness = [], []
    while alive:
        pick = fallback = None
        for v in sorted(alive):
            found = maximum_neighbours(G, v, alive)
            other = next((u for u in found if u != v), None)
            if other is not None:
                pick = (v, other)
                break
            if found and fallback is None:
                fallback = (v, found[0])
        pick = pick or fallback
        if pick is None:
            return None
        order.append(pick[0])
        witness.append(pick[1])
        alive.discard(pick[0])
    return MaxNeighbourhoodOrdering(tuple(order), tuple(witness))


def exhaustive_mno_search(G: Graph) -> Optional[MaxNeighbourhoodOrdering]:
    """Depth-first search over all vertex orderings, pruning invalid prefixes."""
    if G.n > EXHAUSTIVE_MNO_LIMIT:
        raise TooLarge(G.n, EXHAUSTIVE_MNO_LIMIT, "exhaustive_mno_search")
    masks = G.masks
    full = (1 << G.n) - 1
    closed = [masks[v] | (1 << v) for v in range(G.n)]

    def max_nb(v, alive):
        cv = closed[v] & alive
        for u in range(G.n):
            if not cv >> u & 1:
                continue
            cu = closed[u] & alive
            w_mask = cv
            while w_mask:
                low = w_mask & -w_mask
                w = low.bit_length() - 1
                if closed[w] & alive & ~cu:
                    break
                w_mask ^= low
            else:
                return u
        return None

    order, witness = [], []

    def search(alive):
        if not alive:
            return True
        for v in range(G.n):
            if not alive >> v & 1:
                continue
            u = max_nb(v, alive)
            if u is None:
                continue
            order.append(v)
            witness.append(u)
            if search(alive & ~(1 << v)):
                return True
            order.pop()
            witness.pop()
        return False

    if search(full):
        return MaxNeighbourhoodOrdering(tuple(order), tuple(witness))
    return None


def _tree_from_edges(n: int, edges: Iterable[tuple[int, int]], root: int, route="given") -> CompatibleTree:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent: list[Optional[int]] = [None] * n
    seen = [False] * n
    seen[root] = True
    stack = [root]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    if not all(seen):
        raise ValueError("edges do not span the vertex set")
    return CompatibleTree(tuple(parent), root, route)


def build_compatible_tree(
    G: Graph,
    mno: MaxNeighbourhoodOrdering,
    cliques: Optional[Sequence[Iterable[int]]] = None,
) -> CompatibleTree:
    """Spanning tree in which every maximal clique induces a subtree.

    First candidate: ``parent(v_i) = u_i`` from the ordering's witnesses,
    with a residual neighbour standing in when ``v_i`` is its own witness
    (preferring one that is itself a maximum neighbour). If that candidate
    fails verification, the maximum-weight spanning tree under clique
    multiplicity weights is used, and for ``n <= 8`` exhaustive search is
    the last resort. ``route`` on the result records which one succeeded.
    """
    from .oracle import CLIQUE_LIMIT, maximal_cliques

    n = G.n
    if n == 0:
        raise ValueError("empty graph has no spanning tree")
    if cliques is None and n <= CLIQUE_LIMIT:
        cliques = maximal_cliques(G)
    tree = witness_tree(G, mno)
    if tree is not None and _check(G, tree, cliques):
        return tree
    log.debug("witness tree failed verification on %r", G)
    if cliques is not None:
        tree = clique_weight_tree(G, cliques)
        if _check(G, tree, cliques):
            return tree
    if n <= EXHAUSTIVE_TREE_LIMIT:
        found = exhaustive_compatible_tree(G, cliques)
        if found is not None:
            return found
    raise NoCompatibleTree("no verified spanning tree satisfies the clique-subtree conditions")


def witness_tree(G: Graph, mno: MaxNeighbourhoodOrdering) -> Optional[CompatibleTree]:
    """Parent links from the ordering's witnesses, unverified; ``None`` if they do not form a tree."""
    n = G.n
    parent: list[Optional[int]] = [None] * n
    alive = set(range(n))
    for v, u in zip(mno.order[:-1], mno.witness[:-1]):
        if u == v:
            residual = [w for w in G.adj[v] if w in alive]
            if not residual:
                return None
            u = next((w for w in residual if _is_max_neighbour(G, v, w, alive)), residual[0])
        parent[v] = u
        alive.discard(v)
    tree = CompatibleTree(tuple(parent), mno.order[-1], "witness")
    try:
        tree.depth
    except ValueError:
        return None
    return tree


def clique_weight_tree(G: Graph, cliques: Sequence[Iterable[int]]) -> CompatibleTree:
    """Maximum-weight spanning tree where edge ``uv`` weighs the number of cliques containing it.

    Any spanning tree has weight at most the sum of ``|K| - 1`` over the
    cliques, with equality exactly when every clique induces a subtree, so
    this finds a compatible tree whenever one exists.
    """
    weight: dict[tuple[int, int], int] = {e: 0 for e in G.edges()}
    for k in cliques:
        for a, b in combinations(sorted(k), 2):
            weight[(a, b)] += 1
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for e in sorted(weight, key=lambda e: (-weight[e], e)):
        ra, rb = find(e[0]), find(e[1])
        if ra != rb:
            parent[ra] = rb
            chosen.append(e)
    return _tree_from_edges(G.n, chosen, G.n - 1, "clique_weight")


def _is_max_neighbour(G: Graph, v: int, u: int, alive) -> bool:
    closed_v = _alive_closed(G, v, alive)
    cu = _alive_closed(G, u, alive)
    return u in closed_v and all(_alive_closed(G, w, alive) <= cu for w in closed_v)


def _check(G: Graph, tree: CompatibleTree, cliques) -> bool:
    if cliques is None:
        return verify_condition3(G, tree)
    return verify_compatible_tree(G, tree, cliques).ok


def spanning_trees(G: Graph):
    """Yield the edge sets of all spanning trees of a connected ``G``."""
    edges = G.edge_list()
    n = G.n
    need = n - 1

    def find(parent, x):
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[tuple[int, int]] = []

    def rec(i, parent):
        if len(chosen) == need:
            yield list(chosen)
            return
        if len(edges) - i < need - len(chosen):
            return
        u, v = edges[i]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            p2 = list(parent)
            p2[ru] = rv
            chosen.append((u, v))
            yield from rec(i + 1, p2)
            chosen.pop()
        yield from rec(i + 1, parent)

    if n == 1:
        yield []
        return
    yield from rec(0, list(range(n)))


def exhaustive_compatible_tree(G: Graph, cliques=None) -> Optional[CompatibleTree]:
    if G.n > EXHAUSTIVE_TREE_LIMIT:
        raise TooLarge(G.n, EXHAUSTIVE_TREE_LIMIT, "exhaustive_compatible_tree")
    if not is_connected(G):
        return None
    for edges in spanning_trees(G):
        tree = _tree_from_edges(G.n, edges, G.n - 1, "exhaustive")
        if _check(G, tree, cliques):
            return tree
    return None


def tree_path(T: CompatibleTree, u: int, v: int) -> list[int]:
    """Vertices of the ``u``-``v`` path in ``T``, endpoints included, in order from ``u``."""
    depth = T.depth
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = T.parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = T.parent[b]
        right.append(b)
    while a != b:
        a = T.parent[a]
        b = T.parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return left + right[::-1]


def tree_path_interior(T: CompatibleTree, u: int, v: int) -> list[int]:
    """Interior of the ``u``-``v`` tree path; empty when ``uv`` is a tree edge."""
    if u == v:
        raise ValueError("endpoints must differ")
    return tree_path(T, u, v)[1:-1]


def verify_condition3(G: Graph, T: CompatibleTree) -> bool:
    nbrs = G.nbrs
    for u, v in G.edges():
        for w in tree_path_interior(T, u, v):
            if w not in nbrs[u] or w not in nbrs[v]:
                return False
    return True


def _is_spanning(G: Graph, T: CompatibleTree) -> bool:
    if T.n != G.n:
        return False
    try:
        T.depth
    except ValueError:
        return False
    return all(p is None or G.has_edge(v, p) for v, p in enumerate(T.parent)) and (
        sum(p is not None for p in T.parent) == G.n - 1
    )


def verify_compatible_tree(G: Graph, T: CompatibleTree, cliques: Sequence[Iterable[int]]) -> TreeReport:
    """Check the three tree conditions for ``T`` against ``G`` and its maximal cliques.

    ``cond3``: every edge's tree path interior is adjacent to both endpoints.
    ``cond2``: every maximal clique induces a subtree of ``T``.
    ``clique_path``: for every edge ``uv`` the whole tree path is a clique.
    """
    if not _is_spanning(G, T):
        return TreeReport(False, False, False, False)
    nbrs = G.nbrs
    cond3 = True
    clique_path = True
    for u, v in G.edges():
        p = tree_path(T, u, v)
        interior = p[1:-1]
        if any(w not in nbrs[u] or w not in nbrs[v] for w in interior):
            cond3 = False
        if clique_path and any(b not in nbrs[a] for a, b in combinations(p, 2)):
            clique_path = False
    tree_edges = T.edges()
    cond2 = True
    for k in cliques:
        k = sorted(k)
        inside = sum((a, b) in tree_edges for a, b in combinations(k, 2))
        if inside != len(k) - 1:
            cond2 = False
            break
    return TreeReport(True, cond3, cond2, clique_path)
