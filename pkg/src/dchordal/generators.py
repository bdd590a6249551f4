"""Seeded graph generators for test corpora and benchmarks.

All randomness comes from numpy's PCG64 bit generator. A :class:`GenSpec`
seed is expanded through ``numpy.random.SeedSequence`` and split into
independent child streams (tree shape, edge coins, labelling), so equal
specs always produce identical edge lists.

Every family re-verifies its defining property before returning
(always up to ``VERIFY_LIMIT`` vertices) and raises
:class:`VerificationFailed` on a mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from .errors import VerificationFailed
from .graph import Graph, from_edges
from .recognition import CompatibleTree, find_mno, tree_path_interior
from .structure import blocks_locally_connected, find_k4

VERIFY_LIMIT = 200
PAIRWISE_LIMIT = 2000


class Family(str, Enum):
    DUALLY_CHORDAL = "duallyChordal"
    K4_FREE_DUALLY_CHORDAL = "k4FreeDuallyChordal"
    LOCALLY_CONNECTED_BLOCKS = "locallyConnectedBlocks"
    CONNECTED_RANDOM = "connectedRandom"


@dataclass(frozen=True)
class GenSpec:
    n: int
    density: float
    seed: int
    family: Family = Family.CONNECTED_RANDOM
    # chance that a new vertex opens a fresh block (locallyConnectedBlocks only)
    block_rate: float = 0.1

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")

    def streams(self, k: int) -> list[np.random.Generator]:
        seq = np.random.SeedSequence(self.seed)
        return [np.random.Generator(np.random.PCG64(s)) for s in seq.spawn(k)]


def add_universal_vertex(G: Graph) -> Graph:
    """Append vertex ``n`` adjacent to every existing vertex."""
    u = G.n
    return from_edges(G.n + 1, list(G.edges()) + [(v, u) for v in range(G.n)])


def reduce_3col_to_4col(G: Graph) -> Graph:
    """``G`` is 3-colourable iff the result is 4-colourable; the result is always dually chordal."""
    return add_universal_vertex(G)


def random_tree_parents(n: int, rng: np.random.Generator) -> list[int]:
    """``parent[i]`` uniform among ``0 .. i-1`` for ``i >= 1``; ``parent[0] = -1``."""
    if n == 1:
        return [-1]
    draws = rng.random(n)
    return [-1] + [int(draws[i] * i) for i in range(1, n)]


def _relabel_edges(edges, perm):
    return [(int(perm[u]), int(perm[v])) for u, v in edges]


def _tree_object(parent, perm) -> CompatibleTree:
    n = len(parent)
    out = [None] * n
    for i, p in enumerate(parent):
        if p >= 0:
            out[int(perm[i])] = int(perm[p])
    return CompatibleTree(tuple(out), int(perm[0]), "generator")


def _grow_on_tree(spec: GenSpec, k4_free: bool) -> tuple[Graph, CompatibleTree]:
    tree_rng, coin_rng, label_rng = spec.streams(3)
    n = spec.n
    parent = random_tree_parents(n, tree_rng)
    T = CompatibleTree(tuple(p if p >= 0 else None for p in parent), 0)
    nbrs = [set() for _ in range(n)]
    for i in range(1, n):
        nbrs[i].add(parent[i])
        nbrs[parent[i]].add(i)
    pairs = [(u, v) for u, v in combinations(range(n), 2) if v not in nbrs[u]]
    if pairs:
        order = coin_rng.permutation(len(pairs))
        wanted = coin_rng.random(len(pairs)) < spec.density
        pairs = [pairs[i] for i in order if wanted[i]]
    interiors = {e: tree_path_interior(T, *e) for e in pairs}
    added = True
    while added and pairs:
        added = False
        rest = []
        for u, v in pairs:
            nu, nv = nbrs[u], nbrs[v]
            if all(w in nu and w in nv for w in interiors[(u, v)]):
                if k4_free:
                    common = sorted(nu & nv)
                    if any(b in nbrs[a] for a, b in combinations(common, 2)):
                        continue  # would close a K4; never retried
                nu.add(v)
                nv.add(u)
                added = True
            else:
                rest.append((u, v))
        pairs = rest
    perm = label_rng.permutation(n)
    edges = [(u, v) for u in range(n) for v in nbrs[u] if u < v]
    G = from_edges(n, _relabel_edges(edges, perm))
    return G, _tree_object(parent, perm)


def gen_dually_chordal_with_tree(spec: GenSpec) -> tuple[Graph, CompatibleTree]:
    """Random tree plus edges whose tree-path interior is already adjacent to both ends.

    The returned tree is the generating tree, which witnesses the path
    condition by construction.
    """
    G, T = _grow_on_tree(spec, k4_free=False)
    if G.n <= VERIFY_LIMIT and find_mno(G) is None:
        raise VerificationFailed(f"generated graph has no maximum neighbourhood ordering: {spec}")
    return G, T


def gen_dually_chordal(spec: GenSpec) -> Graph:
    return gen_dually_chordal_with_tree(spec)[0]


def gen_k4_free_dually_chordal_with_tree(spec: GenSpec) -> tuple[Graph, CompatibleTree]:
    G, T = _grow_on_tree(spec, k4_free=True)
    if G.n <= VERIFY_LIMIT:
        if find_k4(G) is not None:
            raise VerificationFailed(f"generated graph contains a K4: {spec}")
        if find_mno(G) is None:
            raise VerificationFailed(f"generated graph has no maximum neighbourhood ordering: {spec}")
    return G, T


def gen_k4_free_dually_chordal(spec: GenSpec) -> Graph:
    return gen_k4_free_dually_chordal_with_tree(spec)[0]


def gen_locally_connected_blocks(spec: GenSpec) -> Graph:
    """Block tree whose blocks are grown by attaching each new vertex to an existing block edge.

    A new vertex opens a fresh block (a bridge to a random earlier vertex)
    with probability ``block_rate``. Otherwise it joins both ends of a random
    edge of the current block, and for each of those two ends, with
    probability ``density``, also joins a random block neighbour of that end.
    Both moves keep every block locally connected.
    """
    n = spec.n
    draw_rng, label_rng = spec.streams(2)
    if n == 1:
        return from_edges(1, [])
    r_block, r_edge, r_art = draw_rng.random((3, n))
    r_extra = draw_rng.random((n, 2))
    r_pick = draw_rng.random((n, 2))
    block_rate, density = spec.block_rate, spec.density

    edges = [(0, 1)]
    adj_sets = [set() for _ in range(n)]
    adj_sets[0].add(1)
    adj_sets[1].add(0)
    bedges = [(0, 1)]
    badj = {0: [1], 1: [0]}
    for x in range(2, n):
        if r_block[x] < block_rate:
            a = int(r_art[x] * x)
            edges.append((a, x))
            adj_sets[a].add(x)
            adj_sets[x].add(a)
            bedges = [(a, x)]
            badj = {a: [x], x: [a]}
            continue
        a, b = bedges[int(r_edge[x] * len(bedges))]
        ax = adj_sets[x]
        for y in (a, b):
            edges.append((y, x))
            adj_sets[y].add(x)
            ax.add(y)
            bedges.append((y, x))
            badj[y].append(x)
        badj[x] = [a, b]
        for j, end in enumerate((a, b)):
            if r_extra[x, j] >= density:
                continue
            cand = badj[end]
            y = cand[int(r_pick[x, j] * len(cand))]
            if y == x or y in ax:
                continue
            edges.append((y, x))
            adj_sets[y].add(x)
            ax.add(y)
            bedges.append((y, x))
            badj[y].append(x)
            badj[x].append(y)
    perm = label_rng.permutation(n)
    G = from_edges(n, _relabel_edges(edges, perm))
    if n <= VERIFY_LIMIT and not blocks_locally_connected(G):
        raise VerificationFailed(f"generated graph has a block that is not locally connected: {spec}")
    return G


def gen_connected_random(spec: GenSpec) -> Graph:
    """Random recursive tree plus each remaining pair independently with probability ``density``.

    Above ``PAIRWISE_LIMIT`` vertices the extra-edge count is drawn from the
    matching binomial and the pairs are sampled uniformly instead.
    """
    tree_rng, coin_rng, label_rng = spec.streams(3)
    n = spec.n
    parent = random_tree_parents(n, tree_rng)
    edges = {(parent[i], i) for i in range(1, n)}
    if n <= PAIRWISE_LIMIT:
        pairs = [(u, v) for u, v in combinations(range(n), 2) if (u, v) not in edges]
        if pairs:
            keep = coin_rng.random(len(pairs)) < spec.density
            edges.update(p for p, k in zip(pairs, keep) if k)
    else:
        free = n * (n - 1) // 2 - (n - 1)
        target = int(coin_rng.binomial(free, spec.density))
        extra = set()
        while len(extra) < target:
            uv = coin_rng.integers(0, n, size=(max(1024, target - len(extra)), 2))
            for u, v in uv.tolist():
                if u == v:
                    continue
                e = (u, v) if u < v else (v, u)
                if e not in edges:
                    extra.add(e)
                    if len(extra) == target:
                        break
        edges |= extra
    perm = label_rng.permutation(n)
    return from_edges(n, _relabel_edges(sorted(edges), perm))


def generate(spec: GenSpec) -> Graph:
    family = Family(spec.family)
    if family is Family.DUALLY_CHORDAL:
        return gen_dually_chordal(spec)
    if family is Family.K4_FREE_DUALLY_CHORDAL:
        return gen_k4_free_dually_chordal(spec)
    if family is Family.LOCALLY_CONNECTED_BLOCKS:
        return gen_locally_connected_blocks(spec)
    return gen_connected_random(spec)
