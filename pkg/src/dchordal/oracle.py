"""Exponential reference implementations for small graphs.

Everything here trades speed for transparency and is guarded by a vertex
limit. The functions are the ground truth that the fast algorithms in the
rest of the package are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .coloring import Coloring
from .errors import PreconditionViolated, TooLarge
from .graph import Graph, complement, from_edges, induced_subgraph

COLORING_LIMIT = 20
CHROMATIC_LIMIT = 14
CLIQUE_LIMIT = 64
CYCLE_LIMIT = 14
DEFINITION_LIMIT = 9


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    antihole: bool = False
    hub: Optional[int] = None

    def __len__(self):
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _guard(G: Graph, limit: int, what: str) -> None:
    if G.n > limit:
        raise TooLarge(G.n, limit, what)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def brute_force_k_colorable(G: Graph, k: int) -> Optional[Coloring]:
    """Backtracking search for a proper ``k``-colouring.

    Vertices are coloured in BFS order; a vertex may only open colour
    ``max_used + 1``, which removes colour-name symmetry.
    """
    _guard(G, COLORING_LIMIT, "brute_force_k_colorable")
    n = G.n
    if n == 0:
        return Coloring(())
    if k <= 0:
        return None
    order = []
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        order.append(s)
        i = len(order) - 1
        while i < len(order):
            for u in G.adj[order[i]]:
                if not seen[u]:
                    seen[u] = True
                    order.append(u)
            i += 1
    color = [0] * n
    adj = G.adj

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = {color[u] for u in adj[v]}
        for c in range(1, min(k, used + 1) + 1):
            if c in taken:
                continue
            color[v] = c
            if rec(i + 1, max(used, c)):
                return True
        color[v] = 0
        return False

    if rec(0, 0):
        return Coloring(tuple(color))
    return None


def chromatic_number(G: Graph) -> int:
    _guard(G, CHROMATIC_LIMIT, "chromatic_number")
    k = 0
    while brute_force_k_colorable(G, k) is None:
        k += 1
    return k


def maximal_cliques(G: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques by Bron-Kerbosch with Tomita pivoting, sorted."""
    _guard(G, CLIQUE_LIMIT, "maximal_cliques")
    masks = G.masks
    out: list[tuple[int, ...]] = []

    def expand(r: list[int], p: int, x: int):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(_bits(p | x), key=lambda u: (p & masks[u]).bit_count())
        for v in list(_bits(p & ~masks[pivot])):
            r.append(v)
            expand(r, p & masks[v], x & masks[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    if G.n:
        expand([], (1 << G.n) - 1, 0)
    out.sort()
    return out


def clique_number(G: Graph) -> int:
    if G.n == 0:
        return 0
    return max(len(c) for c in maximal_cliques(G))


def clique_graph(G: Graph) -> tuple[Graph, list[tuple[int, ...]]]:
    """Intersection graph of the maximal cliques; vertex ``i`` is ``cliques[i]``."""
    cliques = maximal_cliques(G)
    sets = [set(c) for c in cliques]
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if sets[i] & sets[j]
    ]
    return from_edges(len(cliques), edges), cliques


def maximum_cardinality_search(G: Graph) -> list[int]:
    """Visit order of MCS; its reverse is a perfect elimination ordering iff G is chordal."""
    n = G.n
    weight = [0] * n
    done = [False] * n
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        order.append(v)
        for u in G.adj[v]:
            if not done[u]:
                weight[u] += 1
    return order


def is_perfect_elimination_ordering(G: Graph, peo: list[int]) -> bool:
    pos = {v: i for i, v in enumerate(peo)}
    nbrs = G.nbrs
    for v in peo:
        later = [u for u in G.adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        p = min(later, key=pos.__getitem__)
        if any(u != p and u not in nbrs[p] for u in later):
            return False
    return True


def is_chordal(G: Graph) -> bool:
    return is_perfect_elimination_ordering(G, maximum_cardinality_search(G)[::-1])


def is_clique_chordal(G: Graph) -> bool:
    K, _ = clique_graph(G)
    return is_chordal(K)


def iter_chordless_cycles(G: Graph, min_len: int = 4) -> Iterator[tuple[int, ...]]:
    """Yield induced cycles with length at least ``max(min_len, 3)``.

    Each cycle is produced once, starting at its smallest vertex and
    continuing towards the smaller of that vertex's two cycle neighbours.
    """
    _guard(G, CYCLE_LIMIT, "chordless cycle enumeration")
    masks = G.masks
    min_len = max(min_len, 3)

    def extend(s, path, forbidden):
        # forbidden: vertices adjacent to an interior path vertex (or on the path)
        last = path[-1]
        for x in _bits(masks[last] & ~forbidden):
            if x <= s:
                continue
            if masks[x] >> s & 1:
                if len(path) >= 2 and path[1] < x and len(path) + 1 >= min_len:
                    yield tuple(path) + (x,)
                continue
            path.append(x)
            yield from extend(s, path, forbidden | masks[last] | (1 << x))
            path.pop()

    for s in range(G.n):
        for p1 in _bits(masks[s]):
            if p1 <= s:
                continue
            yield from extend(s, [s, p1], (1 << s) | (1 << p1))


def find_chordless_cycles(G: Graph, min_len: int = 4) -> list[CycleWitness]:
    return [CycleWitness(c) for c in iter_chordless_cycles(G, min_len)]


def find_odd_hole(G: Graph) -> Optional[tuple[int, ...]]:
    return next((c for c in iter_chordless_cycles(G, 5) if len(c) % 2), None)


def find_imperfection(G: Graph) -> Optional[CycleWitness]:
    """An odd hole of ``G`` or an odd antihole (an odd hole of the complement), else ``None``."""
    _guard(G, CYCLE_LIMIT, "find_imperfection")
    c = find_odd_hole(G)
    if c is not None:
        return CycleWitness(c)
    c = find_odd_hole(complement(G))
    if c is not None:
        return CycleWitness(c, antihole=True)
    return None


def is_perfect_desk(G: Graph) -> bool:
    """Perfection through odd holes and odd antiholes (brute force, n <= 14)."""
    _guard(G, CYCLE_LIMIT, "is_perfect_desk")
    return find_imperfection(G) is None


def is_perfect_by_definition(G: Graph) -> bool:
    """Check clique number == chromatic number on every induced subgraph (n <= 9)."""
    _guard(G, DEFINITION_LIMIT, "is_perfect_by_definition")
    for s in range(1, 1 << G.n):
        H, _ = induced_subgraph(G, _bits(s))
        if clique_number(H) != chromatic_number(H):
            return False
    return True


def wheel_hub(G: Graph, cycle: CycleWitness, T) -> tuple[Optional[int], bool]:
    """Return ``(hub, tree_edge_check)`` for an induced cycle of a K4-free dually chordal graph.

    ``hub`` is the smallest vertex adjacent to the whole cycle; the flag is
    True iff no cycle edge is an edge of ``T``. Raises
    :class:`PreconditionViolated` if ``G`` contains a K4 or ``T`` does not
    verify as a compatible tree.
    """
    from .recognition import verify_compatible_tree
    from .structure import find_k4

    if find_k4(G) is not None:
        raise PreconditionViolated("graph contains a K4")
    if not verify_compatible_tree(G, T, maximal_cliques(G)).ok:
        raise PreconditionViolated("tree fails verification")
    vs = cycle.vertices
    if len(vs) < 4:
        raise PreconditionViolated("cycle must have at least 4 vertices")
    common = set(range(G.n))
    for v in vs:
        common &= G.nbrs[v]
    hub = min(common) if common else None
    tree_ok = not any(T.has_edge(a, b) for a, b in cycle.edges())
    return hub, tree_ok
