"""Linear-time 3-colouring for graphs whose blocks are locally connected.

Every vertex starts with the colour set ``{1, 2, 3}`` (a 3-bit mask). The
loop repeatedly takes an uncoloured vertex with the fewest available
colours, fixes its smallest available colour and removes that colour from
its uncoloured neighbours. Uncoloured vertices live in three FIFO buckets
(doubly linked lists threaded through per-vertex ``prev``/``next`` arrays)
keyed by the number of available colours: 3, 2, or at most 1. Moving a
vertex between buckets is O(1), so a full run costs O(n + m).
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import Disconnected, NotApplicable
from .graph import Graph, induced_subgraph, is_connected
from .structure import blocks, is_locally_connected

ALL3 = 0b111
# bucket index per mask: 0 holds |avail| <= 1, 1 holds 2, 2 holds 3
_BUCKET = (0, 0, 0, 1, 0, 1, 1, 2)
_LOWEST = (0, 1, 2, 1, 3, 1, 2, 1)  # smallest colour in mask, 0 for empty
_NIL = -1


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]


class ColorState:
    """Working state of the 3-colouring loop.

    ``select()`` returns the uncoloured vertex at the head of the lowest
    non-empty bucket; ``fix(v)`` colours it and updates its neighbours.
    Passing ``rng`` randomises the initial order and whether migrating
    vertices enter their bucket at the head or the tail.
    """

    def __init__(self, G: Graph, rng: Optional[random.Random] = None):
        n = G.n
        self.G = G
        self.rng = rng
        self.avail = [ALL3] * n
        self.color = [0] * n
        self.prev = [_NIL] * n
        self.next = [_NIL] * n
        self.where = [2] * n
        self.head = [_NIL, _NIL, _NIL]
        self.tail = [_NIL, _NIL, _NIL]
        self.uncoloured = n
        order = list(range(n))
        if rng is not None:
            rng.shuffle(order)
        prev, nxt = self.prev, self.next
        last = _NIL
        for v in order:
            prev[v] = last
            if last != _NIL:
                nxt[last] = v
            last = v
        if n:
            self.head[2] = order[0]
            self.tail[2] = order[-1]

    def _unlink(self, v: int) -> None:
        b = self.where[v]
        p, q = self.prev[v], self.next[v]
        if p == _NIL:
            self.head[b] = q
        else:
            self.next[p] = q
        if q == _NIL:
            self.tail[b] = p
        else:
            self.prev[q] = p
        self.prev[v] = self.next[v] = _NIL

    def _push(self, v: int, b: int) -> None:
        self.where[v] = b
        if self.rng is not None and self.rng.random() < 0.5:
            h = self.head[b]
            self.next[v] = h
            if h == _NIL:
                self.tail[b] = v
            else:
                self.prev[h] = v
            self.head[b] = v
            return
        t = self.tail[b]
        self.prev[v] = t
        if t == _NIL:
            self.head[b] = v
        else:
            self.next[t] = v
        self.tail[b] = v

    def bucket(self, b: int) -> list[int]:
        out, v = [], self.head[b]
        while v != _NIL:
            out.append(v)
            v = self.next[v]
        return out

    def select(self) -> int:
        for b in (0, 1, 2):
            v = self.head[b]
            if v != _NIL:
                return v
        raise LookupError("no uncoloured vertex left")

    def fix(self, v: int) -> bool:
        """Colour ``v``; return False (and leave ``v`` uncoloured) if it has no colour left."""
        mask = self.avail[v]
        if not mask:
            return False
        c = _LOWEST[mask]
        bit = 1 << (c - 1)
        self._unlink(v)
        self.avail[v] = bit
        self.color[v] = c
        self.uncoloured -= 1
        avail, color, where = self.avail, self.color, self.where
        for u in self.G.adj[v]:
            if color[u]:
                continue
            a = avail[u]
            if a & bit:
                a ^= bit
                avail[u] = a
                nb = _BUCKET[a]
                if nb != where[u]:
                    self._unlink(u)
                    self._push(u, nb)
        return True


def three_color(G: Graph, rng: Optional[random.Random] = None) -> Optional[Coloring]:
    """Run the bucket-queue 3-colouring; ``None`` means it found no colouring.

    On graphs whose blocks are locally connected, ``None`` happens exactly
    when the graph is not 3-colourable. Any returned colouring is proper.
    Raises :class:`Disconnected` for disconnected input.
    """
    if not is_connected(G):
        raise Disconnected("three_color")
    if rng is None:
        return _three_color_fast(G)
    state = ColorState(G, rng)
    while state.uncoloured:
        if not state.fix(state.select()):
            return None
    return Coloring(tuple(state.color))


def _three_color_fast(G: Graph) -> Optional[Coloring]:
    # ColorState's loop with the method calls inlined; this is the benchmarked path.
    # avail[v] < 8 is the mask of an uncoloured vertex, avail[v] == 8 + c marks colour c.
    # A vertex's bucket is always _BUCKET[avail[v]], so no separate bucket array is kept.
    n = G.n
    adj = G.adj
    avail = [ALL3] * n
    prev = list(range(-1, n - 1))
    nxt = list(range(1, n + 1))
    if n:
        nxt[-1] = _NIL
    head = [_NIL, _NIL, 0 if n else _NIL]
    tail = [_NIL, _NIL, n - 1 if n else _NIL]
    bucket_of = _BUCKET
    lowest = _LOWEST
    for _ in range(n):
        v = head[0]
        if v == _NIL:
            v = head[1]
            if v == _NIL:
                v = head[2]
        mask = avail[v]
        if not mask:
            return None
        c = lowest[mask]
        bit = 1 << (c - 1)
        b = bucket_of[mask]
        p, q = prev[v], nxt[v]
        if p == _NIL:
            head[b] = q
        else:
            nxt[p] = q
        if q == _NIL:
            tail[b] = p
        else:
            prev[q] = p
        avail[v] = 8 + c
        for u in adj[v]:
            a = avail[u]
            if a >= 8 or not a & bit:
                continue
            ob = bucket_of[a]
            a ^= bit
            avail[u] = a
            nb = bucket_of[a]
            if nb == ob:
                continue
            p, q = prev[u], nxt[u]
            if p == _NIL:
                head[ob] = q
            else:
                nxt[p] = q
            if q == _NIL:
                tail[ob] = p
            else:
                prev[q] = p
            t = tail[nb]
            prev[u] = t
            nxt[u] = _NIL
            if t == _NIL:
                head[nb] = u
            else:
                nxt[t] = u
            tail[nb] = u
    return Coloring(tuple(a - 8 for a in avail))


def three_color_checked(G: Graph, rng: Optional[random.Random] = None) -> Optional[Coloring]:
    """Like :func:`three_color`, but first require every block to be locally connected.

    Raises :class:`NotApplicable` (carrying a violating vertex) otherwise.
    """
    if not is_connected(G):
        raise Disconnected("three_color_checked")
    dec = blocks(G)
    for b in dec.blocks:
        if len(b) < 3:
            continue
        H, index_map = induced_subgraph(G, b)
        ok, w = is_locally_connected(H)
        if not ok:
            raise NotApplicable(index_map[w])
    return three_color(G, rng)


def validate_coloring(G: Graph, c, k: int) -> bool:
    """True iff ``c`` assigns every vertex a colour in ``1..k`` and no edge is monochromatic."""
    colors: Sequence[int] = c.colors if isinstance(c, Coloring) else c
    if len(colors) != G.n:
        return False
    if any(not (1 <= x <= k) for x in colors):
        return False
    return all(colors[u] != colors[v] for u, v in G.edges())


def two_color(G: Graph) -> Optional[Coloring]:
    """BFS bipartition with colours 1 and 2, or ``None`` if an odd cycle exists."""
    color = [0] * G.n
    for s in range(G.n):
        if color[s]:
            continue
        color[s] = 1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if not color[u]:
                    color[u] = 3 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return Coloring(tuple(color))


def same_up_to_permutation(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff some bijection of colour names maps ``a`` onto ``b``."""
    if len(a) != len(b):
        return False
    fwd, back = {}, {}
    for x, y in zip(a, b):
        if fwd.setdefault(x, y) != y or back.setdefault(y, x) != x:
            return False
    return True
