import pytest

from choosability.errors import BudgetExceededError
from choosability.graphs import (CountedMultiGraph, Graph, connected_components,
                                 coloring_is_proper, delete_vertices, diameter,
                                 find_proper_coloring, induced_subgraph,
                                 is_bipartite, is_triangle_free, shortest_cycle)

from conftest import (brute_girth, complete_bipartite, complete_graph,
                      cycle_graph, disjoint_union, graph_classes, mask_to_graph,
                      path_graph, petersen_graph, vertex_pairs)


class TestGraphConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, [(0, 0)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(2, [(0, 2)])

    def test_adjacency_symmetric_and_degree(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        for u, v in g.edges:
            assert u in g.adj[v] and v in g.adj[u]
        assert [g.degree(v) for v in range(4)] == [2, 2, 2, 2]

    def test_multigraph_invariants(self):
        mg = CountedMultiGraph(2, [(0, 1), (0, 1)], counts=(2, 1),
                               provenance=((4, 5), (6,)))
        assert mg.multiplicity(0, 1) == 2
        with pytest.raises(ValueError, match="disjoint"):
            CountedMultiGraph(2, [(0, 1)], counts=(1, 1), provenance=((3,), (3,)))
        with pytest.raises(ValueError, match="count"):
            CountedMultiGraph(1, [], counts=(0,), provenance=((),))


class TestBipartite:
    def test_even_cycle(self):
        ok, coloring = is_bipartite(cycle_graph(6))
        assert ok
        assert coloring_is_proper(cycle_graph(6), coloring)

    def test_complete_bipartite(self):
        assert is_bipartite(complete_bipartite(2, 3))[0]

    def test_odd_cycle_witness(self):
        ok, cycle = is_bipartite(cycle_graph(5))
        assert not ok
        assert len(cycle) % 2 == 1 and len(cycle) >= 3
        g = cycle_graph(5)
        for i, v in enumerate(cycle):
            assert g.has_edge(v, cycle[(i + 1) % len(cycle)])

    def test_odd_witness_revalidates_everywhere(self):
        for n in range(3, 7):
            for g in graph_classes(n):
                ok, witness = is_bipartite(g)
                if ok:
                    assert coloring_is_proper(g, witness)
                else:
                    assert len(witness) % 2 == 1
                    assert len(set(witness)) == len(witness)
                    for i, v in enumerate(witness):
                        assert g.has_edge(v, witness[(i + 1) % len(witness)])

    def test_agrees_with_two_coloring_search(self):
        for n in range(0, 7):
            for g in graph_classes(n):
                assert is_bipartite(g)[0] == (find_proper_coloring(g, 2) is not None)

    def test_agrees_with_two_coloring_search_at_7(self):
        import random
        rng = random.Random(71)
        pairs = vertex_pairs(7)
        for _ in range(250):
            g = mask_to_graph(7, rng.getrandbits(len(pairs)), pairs)
            assert is_bipartite(g)[0] == (find_proper_coloring(g, 2) is not None)


class TestTriangleFree:
    def test_c5(self):
        assert is_triangle_free(cycle_graph(5)) == (True, None)

    def test_k4_witness(self):
        ok, tri = is_triangle_free(complete_graph(4))
        assert not ok
        a, b, c = tri
        g = complete_graph(4)
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)


class TestDiameter:
    def test_even_cycles(self):
        for t in range(1, 9):
            if 2 * t >= 3:
                assert diameter(cycle_graph(2 * t)) == t
        assert diameter(cycle_graph(4)) == 2

    def test_k1_and_empty(self):
        assert diameter(Graph(1, [])) == 0
        assert diameter(Graph(0, [])) == 0

    def test_disconnected(self):
        assert diameter(Graph(2, [])) is None
        assert diameter(disjoint_union(cycle_graph(3), cycle_graph(4))) is None


class TestShortestCycle:
    def test_parallel_pair(self):
        mg = CountedMultiGraph(2, [(0, 1), (0, 1)])
        assert shortest_cycle(mg) == [0, 1]

    def test_simple_cycles(self):
        assert shortest_cycle(CountedMultiGraph.from_graph(cycle_graph(5))) == [0, 1, 2, 3, 4]

    def test_petersen(self):
        assert len(shortest_cycle(CountedMultiGraph.from_graph(petersen_graph()))) == 5

    def test_acyclic(self):
        assert shortest_cycle(CountedMultiGraph.from_graph(path_graph(4))) is None
        assert shortest_cycle(CountedMultiGraph(0, [])) is None

    def test_matches_bruteforce_girth_small(self):
        for n in range(3, 8):
            for g in graph_classes(n) if n <= 6 else []:
                expected = brute_girth(g)
                got = shortest_cycle(CountedMultiGraph.from_graph(g))
                assert (got is None) == (expected is None)
                if got is not None:
                    assert len(got) == expected

    def test_matches_bruteforce_girth_7(self):
        import random
        rng = random.Random(99)
        pairs = vertex_pairs(7)
        for _ in range(120):
            mask = rng.getrandbits(len(pairs))
            g = mask_to_graph(7, mask, pairs)
            expected = brute_girth(g)
            got = shortest_cycle(CountedMultiGraph.from_graph(g))
            assert (got is None) == (expected is None)
            if got is not None:
                assert len(got) == expected

    def test_cycle_witness_revalidates(self):
        for n in range(3, 7):
            for g in graph_classes(n):
                got = shortest_cycle(CountedMultiGraph.from_graph(g))
                if got is None:
                    continue
                assert len(set(got)) == len(got)
                for i, v in enumerate(got):
                    assert g.has_edge(v, got[(i + 1) % len(got)])

    def test_lexicographic_tie_break(self):
        # two triangles; the one through vertex 0 wins
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert shortest_cycle(CountedMultiGraph.from_graph(g)) == [0, 1, 2]


class TestProperColoring:
    def test_odd_cycle_needs_three(self):
        assert find_proper_coloring(cycle_graph(5), 2) is None
        coloring = find_proper_coloring(cycle_graph(5), 3)
        assert coloring_is_proper(cycle_graph(5), coloring)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            find_proper_coloring(complete_graph(8), 7, budget=10)

    def test_agrees_with_exhaustive_product(self):
        import itertools
        for n in range(1, 5):
            for g in graph_classes(n):
                for k in (1, 2, 3):
                    brute = any(
                        all(ch[u] != ch[v] for u, v in g.edges)
                        for ch in itertools.product(range(k), repeat=g.n))
                    assert (find_proper_coloring(g, k) is not None) == brute


class TestComponents:
    def test_union(self):
        g = disjoint_union(Graph(1, []), cycle_graph(4))
        assert connected_components(g) == [(0,), (1, 2, 3, 4)]

    def test_connected(self):
        assert connected_components(cycle_graph(5)) == [(0, 1, 2, 3, 4)]

    def test_empty(self):
        assert connected_components(Graph(0, [])) == []

    def test_ordering_by_smallest_member(self):
        g = Graph(5, [(1, 3), (0, 4)])
        comps = connected_components(g)
        assert comps == [(0, 4), (1, 3), (2,)]


class TestSubgraphs:
    def test_induced_keeps_internal_edges(self):
        g = cycle_graph(5)
        sub, kept = induced_subgraph(g, [0, 1, 2])
        assert kept == (0, 1, 2)
        assert sub.edges == ((0, 1), (1, 2))

    def test_delete_vertices(self):
        g = complete_graph(4)
        sub, kept = delete_vertices(g, [0])
        assert sub.n == 3 and len(sub.edges) == 3
        assert kept == (1, 2, 3)
