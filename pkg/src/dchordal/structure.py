"""Blocks, local connectivity, K4 search and constructive orderings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import Disconnected
from .graph import Graph, induced_subgraph, is_connected


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[tuple[int, ...]]
    articulation: frozenset
    block_of: dict[tuple[int, int], int]

    def block_edges(self, i: int) -> list[tuple[int, int]]:
        return sorted(e for e, b in self.block_of.items() if b == i)


@dataclass(frozen=True)
class ConstructionOrder:
    """Order ``(u, v, v_1, ..)``; ``attach[i]`` is the adjacent witness pair for ``order[i + 2]``."""

    order: tuple[int, ...]
    attach: tuple[tuple[int, int], ...]


def blocks(G: Graph) -> BlockDecomposition:
    """Biconnected components via iterative DFS with lowpoints and an edge stack.

    Blocks are listed by their smallest edge; a single-vertex graph has one
    edgeless block.
    """
    if not is_connected(G):
        raise Disconnected("blocks")
    n = G.n
    if n == 1:
        return BlockDecomposition([(0,)], frozenset(), {})
    adj = G.adj
    disc = [-1] * n
    low = [0] * n
    raw_blocks: list[list[tuple[int, int]]] = []
    articulation = set()
    edge_stack: list[tuple[int, int]] = []
    t = 0
    root = 0
    disc[root] = low[root] = t
    t += 1
    root_children = 0
    # frames: (vertex, parent, next neighbour index)
    stack = [[root, -1, 0]]
    while stack:
        frame = stack[-1]
        v, p, i = frame
        a = adj[v]
        if i < len(a):
            frame[2] = i + 1
            w = a[i]
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = t
                t += 1
                if v == root:
                    root_children += 1
                stack.append([w, v, 0])
            elif w != p and disc[w] < disc[v]:
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
            continue
        stack.pop()
        if p == -1:
            continue
        if low[v] < low[p]:
            low[p] = low[v]
        if low[v] >= disc[p]:
            if p != root:
                articulation.add(p)
            comp = []
            while True:
                e = edge_stack.pop()
                comp.append(e)
                if e == (p, v):
                    break
            raw_blocks.append(comp)
    if root_children > 1:
        articulation.add(root)
    normalised = []
    for comp in raw_blocks:
        es = sorted((min(u, w), max(u, w)) for u, w in comp)
        normalised.append(es)
    normalised.sort(key=lambda es: es[0])
    block_list = []
    block_of = {}
    for i, es in enumerate(normalised):
        verts = set()
        for e in es:
            block_of[e] = i
            verts.update(e)
        block_list.append(tuple(sorted(verts)))
    return BlockDecomposition(block_list, frozenset(articulation), block_of)


def is_locally_connected(G: Graph) -> tuple[bool, Optional[int]]:
    """``(True, None)`` if every open neighbourhood is non-empty and connected,
    else ``(False, v)`` for the first violating vertex ``v``."""
    adj, nbrs = G.adj, G.nbrs
    for v in range(G.n):
        nv = nbrs[v]
        if not nv:
            return False, v
        start = adj[v][0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in nv and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(nv):
            return False, v
    return True, None


def blocks_locally_connected(G: Graph) -> bool:
    """True iff every block with at least three vertices is locally connected."""
    dec = blocks(G)
    for b in dec.blocks:
        if len(b) < 3:
            continue
        H, _ = induced_subgraph(G, b)
        if not is_locally_connected(H)[0]:
            return False
    return True


def find_k4(G: Graph) -> Optional[tuple[int, int, int, int]]:
    nbrs = G.nbrs
    for u, v in G.edges():
        common = sorted(nbrs[u] & nbrs[v])
        for i, a in enumerate(common):
            na = nbrs[a]
            for b in common[i + 1:]:
                if b in na:
                    return tuple(sorted((u, v, a, b)))
    return None


def construction_order(G: Graph) -> Optional[ConstructionOrder]:
    """Grow from the smallest edge, adding vertices that see two adjacent placed vertices.

    Returns ``None`` if the growth stalls before every vertex is placed.
    """
    if G.n < 2:
        raise ValueError("construction order needs at least two vertices")
    if not is_connected(G):
        raise Disconnected("construction_order")
    u, v = next(G.edges())
    adj, nbrs = G.adj, G.nbrs
    placed = [False] * G.n
    order = [u, v]
    attach = []
    placed[u] = placed[v] = True
    queue: deque[tuple[int, int, int]] = deque()

    def offer(x):
        # every unplaced neighbour y of x that also sees a placed neighbour z of x
        for y in adj[x]:
            if placed[y]:
                continue
            for z in adj[y]:
                if z != x and placed[z] and z in nbrs[x]:
                    queue.append((y, x, z))
                    break

    offer(u)
    offer(v)
    while queue:
        y, a, b = queue.popleft()
        if placed[y]:
            continue
        placed[y] = True
        order.append(y)
        attach.append((a, b))
        offer(y)
    if len(order) < G.n:
        return None
    return ConstructionOrder(tuple(order), tuple(attach))


def validate_construction_order(G: Graph, co: ConstructionOrder) -> bool:
    if sorted(co.order) != list(range(G.n)) or len(co.attach) != G.n - 2:
        return False
    if not G.has_edge(co.order[0], co.order[1]):
        return False
    pos = {v: i for i, v in enumerate(co.order)}
    for i, (a, b) in enumerate(co.attach):
        x = co.order[i + 2]
        if not (pos[a] < i + 2 and pos[b] < i + 2):
            return False
        if not (G.has_edge(a, b) and G.has_edge(a, x) and G.has_edge(b, x)):
            return False
    return True
