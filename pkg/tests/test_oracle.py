import random

import networkx as nx
import pytest

from dchordal.errors import PreconditionViolated, TooLarge
from dchordal.graph import (
    complement,
    complete,
    complete_multipartite,
    cycle,
    diamond,
    from_edges,
    path,
    star,
    wheel,
)
from dchordal.oracle import (
    CycleWitness,
    brute_force_k_colorable,
    chromatic_number,
    clique_graph,
    find_chordless_cycles,
    find_imperfection,
    is_chordal,
    is_clique_chordal,
    is_perfect_by_definition,
    is_perfect_desk,
    maximal_cliques,
    wheel_hub,
)
from dchordal.coloring import validate_coloring
from dchordal.recognition import CompatibleTree, build_compatible_tree, exhaustive_mno_search, find_mno

from conftest import atlas_connected, random_connected, to_nx


class TestBruteForce:
    @pytest.mark.parametrize("G, k, present", [
        (complete(4), 3, False),
        (complete(4), 4, True),
        (cycle(5), 3, True),
        (cycle(5), 2, False),
        (complete_multipartite(3, 3, 3), 3, True),
    ])
    def test_examples(self, G, k, present):
        c = brute_force_k_colorable(G, k)
        assert (c is not None) is present
        if c is not None:
            assert validate_coloring(G, c, k)

    def test_guard(self):
        with pytest.raises(TooLarge):
            brute_force_k_colorable(path(21), 3)

    @pytest.mark.parametrize("G, chi", [(complete(4), 4), (cycle(5), 3), (wheel(5), 4), (wheel(4), 3), (star(3), 2)])
    def test_chromatic_number(self, G, chi):
        assert chromatic_number(G) == chi

    def test_chromatic_matches_exhaustive_assignment(self):
        # exhaustive product over colour vectors as an independent oracle
        from itertools import product

        rng = random.Random(4)
        for _ in range(40):
            G = random_connected(rng.randint(2, 6), 0.5, rng)
            chi = next(k for k in range(1, G.n + 1)
                       if any(validate_coloring(G, c, k) for c in product(range(1, k + 1), repeat=G.n)))
            assert chromatic_number(G) == chi


class TestCliques:
    def test_k3(self):
        assert maximal_cliques(complete(3)) == [(0, 1, 2)]

    def test_p3(self):
        assert maximal_cliques(path(3)) == [(0, 1), (1, 2)]

    def test_diamond(self):
        # two triangles sharing the mid-edge 1-2
        assert maximal_cliques(diamond()) == [(0, 1, 2), (1, 2, 3)]

    def test_matches_networkx(self):
        rng = random.Random(9)
        graphs = list(atlas_connected(6)) + [random_connected(rng.randint(5, 20), 0.5, rng) for _ in range(100)]
        for G in graphs:
            ours = maximal_cliques(G)
            theirs = sorted(tuple(sorted(c)) for c in nx.find_cliques(to_nx(G)))
            assert ours == theirs

    def test_guard(self):
        with pytest.raises(TooLarge):
            maximal_cliques(path(65))


class TestCliqueGraph:
    def test_k3(self):
        K, cliques = clique_graph(complete(3))
        assert K.n == 1 and K.m == 0

    def test_p3(self):
        K, _ = clique_graph(path(3))
        assert K == complete(2)

    def test_c4(self):
        K, cliques = clique_graph(cycle(4))
        assert cliques == [(0, 1), (0, 3), (1, 2), (2, 3)]
        assert K.m == 4 and all(K.degree(v) == 2 for v in range(4)) and not is_chordal(K)

    def test_edges_iff_intersection(self):
        for G in atlas_connected(6):
            K, cliques = clique_graph(G)
            for i in range(K.n):
                for j in range(i + 1, K.n):
                    assert K.has_edge(i, j) == bool(set(cliques[i]) & set(cliques[j]))


class TestChordal:
    @pytest.mark.parametrize("G, expected", [
        (star(4), True),
        (path(5), True),
        (cycle(4), False),
        (from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]), False),
        (diamond(), True),
    ])
    def test_examples(self, G, expected):
        assert is_chordal(G) is expected

    def test_matches_networkx(self):
        for G in atlas_connected(7):
            assert is_chordal(G) == nx.is_chordal(to_nx(G))

    def test_clique_chordal_examples(self):
        assert is_clique_chordal(complete(3))
        assert not is_clique_chordal(cycle(4))

    def test_dually_chordal_graphs_are_clique_chordal(self):
        for G in atlas_connected(7):
            if find_mno(G) is not None:
                assert is_clique_chordal(G)


class TestCycles:
    def test_chordal_has_none(self):
        assert find_chordless_cycles(complete(5), 4) == []
        assert find_chordless_cycles(diamond(), 4) == []

    def test_c5(self):
        found = find_chordless_cycles(cycle(5), 4)
        assert found == [CycleWitness((0, 1, 2, 3, 4))]

    def test_w4_rim(self):
        assert find_chordless_cycles(wheel(4), 4) == [CycleWitness((0, 1, 2, 3))]

    def test_triangles_with_min_len_3(self):
        assert len(find_chordless_cycles(complete(4), 3)) == 4

    def test_canonical_orientation(self):
        for w in find_chordless_cycles(complete_multipartite(3, 3), 4):
            vs = w.vertices
            assert vs[0] == min(vs) and vs[1] < vs[-1]

    def test_matches_networkx(self):
        for G in atlas_connected(6):
            ours = sorted(frozenset(w.vertices) for w in find_chordless_cycles(G, 4))
            theirs = sorted(frozenset(c) for c in nx.chordless_cycles(to_nx(G)) if len(c) >= 4)
            assert sorted(map(sorted, ours)) == sorted(map(sorted, theirs))

    def test_guard(self):
        with pytest.raises(TooLarge):
            find_chordless_cycles(path(15))


class TestPerfect:
    @pytest.mark.parametrize("G, expected", [
        (complete_multipartite(3, 4), True),
        (path(6), True),
        (cycle(5), False),
        (wheel(5), False),
        (cycle(7), False),
        (complement(cycle(7)), False),
        (cycle(6), True),
        (complement(cycle(6)), True),
    ])
    def test_examples(self, G, expected):
        assert is_perfect_desk(G) is expected

    def test_antihole_reported(self):
        w = find_imperfection(complement(cycle(7)))
        assert w.antihole and len(w) == 7

    def test_two_definitions_agree(self):
        for G in atlas_connected(7):
            assert is_perfect_desk(G) == is_perfect_by_definition(G)


class TestWheelHub:
    def test_w4(self):
        G = wheel(4)
        T = CompatibleTree((4, 4, 4, 4, None), 4)
        assert wheel_hub(G, CycleWitness((0, 1, 2, 3)), T) == (4, True)

    def test_w5(self):
        G = wheel(5)
        assert exhaustive_mno_search(G) is not None
        T = build_compatible_tree(G, find_mno(G))
        (rim,) = find_chordless_cycles(G, 4)
        assert wheel_hub(G, rim, T) == (5, True)

    def test_unverified_tree(self):
        G = complete_multipartite(2, 2, 2)
        T = CompatibleTree((None, 0, 1, 2, 3, 4), 0)  # a Hamiltonian path, not compatible
        with pytest.raises(PreconditionViolated):
            wheel_hub(G, CycleWitness((0, 2, 1, 3)), T)

    def test_k4_rejected(self):
        G = wheel(4)
        H = from_edges(5, list(G.edges()) + [(0, 2)])
        with pytest.raises(PreconditionViolated):
            wheel_hub(H, CycleWitness((0, 1, 2, 3)), CompatibleTree((4, 4, 4, 4, None), 4))
