import random
from itertools import combinations

import networkx as nx
import pytest

from dchordal.errors import Disconnected
from dchordal.graph import complete, complete_multipartite, cycle, disjoint_union, from_edges, path, star, wheel
from dchordal.structure import (
    ConstructionOrder,
    blocks,
    blocks_locally_connected,
    construction_order,
    find_k4,
    is_locally_connected,
    validate_construction_order,
)

from conftest import atlas_connected, random_connected, to_nx

BOWTIE = from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


class TestBlocks:
    def test_triangle(self):
        dec = blocks(complete(3))
        assert dec.blocks == [(0, 1, 2)] and dec.articulation == frozenset()

    def test_p3(self):
        dec = blocks(path(3))
        assert dec.blocks == [(0, 1), (1, 2)]
        assert dec.articulation == {1}

    def test_bowtie(self):
        dec = blocks(BOWTIE)
        assert dec.blocks == [(0, 1, 2), (2, 3, 4)]
        assert dec.articulation == {2}
        assert dec.block_edges(1) == [(2, 3), (2, 4), (3, 4)]

    def test_single_vertex(self):
        assert blocks(from_edges(1, [])).blocks == [(0,)]

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            blocks(from_edges(2, []))

    def test_deep_path_no_recursion_limit(self):
        dec = blocks(path(50_000))
        assert len(dec.blocks) == 49_999

    def test_matches_networkx(self):
        rng = random.Random(11)
        graphs = list(atlas_connected(6)) + [random_connected(rng.randint(5, 25), rng.choice([0.1, 0.2, 0.3]), rng)
                                             for _ in range(200)]
        for G in graphs:
            if G.n < 2:
                continue
            dec = blocks(G)
            H = to_nx(G)
            assert sorted(dec.blocks) == sorted(tuple(sorted(b)) for b in nx.biconnected_components(H))
            assert dec.articulation == set(nx.articulation_points(H))
            # every edge in exactly one block; articulation points = vertices in >= 2 blocks
            assert len(dec.block_of) == G.m
            count = {}
            for b in dec.blocks:
                for v in b:
                    count[v] = count.get(v, 0) + 1
            assert {v for v, c in count.items() if c >= 2} == dec.articulation
            for i, j in combinations(range(len(dec.blocks)), 2):
                common = set(dec.blocks[i]) & set(dec.blocks[j])
                assert len(common) <= 1 and common <= dec.articulation


class TestLocalConnectivity:
    def test_k4(self):
        assert is_locally_connected(complete(4)) == (True, None)

    def test_p3_witness(self):
        # N(1) = {0, 2} is disconnected; the leaves have a single neighbour
        assert is_locally_connected(path(3)) == (False, 1)

    def test_p3_middle(self):
        # P3 with the middle vertex first in id order
        G = from_edges(3, [(0, 1), (0, 2)])
        assert is_locally_connected(G) == (False, 0)

    def test_w5(self):
        assert is_locally_connected(wheel(5))[0]

    def test_isolated_vertex_fails(self):
        assert is_locally_connected(from_edges(1, []))[0] is False

    def test_matches_definition(self):
        for G in atlas_connected(6):
            H = to_nx(G)
            expected = all(
                len(list(H.neighbors(v))) > 0 and nx.is_connected(H.subgraph(H.neighbors(v)))
                for v in H
            )
            assert is_locally_connected(G)[0] is expected


class TestBlocksLocallyConnected:
    def test_tree(self):
        assert blocks_locally_connected(star(4))
        assert blocks_locally_connected(path(6))

    def test_c4(self):
        assert not blocks_locally_connected(cycle(4))

    def test_bowtie(self):
        assert blocks_locally_connected(BOWTIE)


class TestFindK4:
    def test_k4(self):
        assert find_k4(complete(4)) == (0, 1, 2, 3)

    def test_bipartite(self):
        assert find_k4(complete_multipartite(3, 4)) is None

    def test_w5(self):
        assert find_k4(wheel(5)) is None

    def test_matches_brute_force(self):
        for G in atlas_connected(6):
            brute = any(all(G.has_edge(a, b) for a, b in combinations(q, 2)) for q in combinations(range(G.n), 4))
            found = find_k4(G)
            assert (found is not None) == brute
            if found:
                assert all(G.has_edge(a, b) for a, b in combinations(found, 2))


class TestConstructionOrder:
    def test_k4(self):
        co = construction_order(complete(4))
        assert co is not None and len(co.order) == 4 and validate_construction_order(complete(4), co)

    def test_p3_stalls(self):
        assert construction_order(path(3)) is None

    def test_octahedron(self):
        G = complete_multipartite(2, 2, 2)
        assert is_locally_connected(G)[0]
        co = construction_order(G)
        assert co is not None and validate_construction_order(G, co)

    def test_validator_rejects_bad_witness(self):
        G = complete(4)
        assert not validate_construction_order(G, ConstructionOrder((0, 1, 2, 3), ((0, 1), (2, 3))))

    def test_every_locally_connected_graph_grows(self):
        seen = 0
        for G in atlas_connected(7):
            if G.n >= 2 and is_locally_connected(G)[0]:
                co = construction_order(G)
                assert co is not None and validate_construction_order(G, co)
                seen += 1
        assert seen > 100

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            construction_order(disjoint_union(complete(3), complete(3)))
