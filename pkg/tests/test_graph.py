import math
import random

import pytest

from gencut import (
    INF,
    BoundsError,
    DisconnectedComponent,
    NoFiniteCut,
    WeightedGraph,
    max_flow_value,
    min_st_edge_cut,
    min_st_node_cut,
    shrink_components,
)

from _oracles import (
    brute_cpmc_weight,
    brute_min_edge_cut_weight,
    brute_min_node_cut_weight,
)


def random_graph(rng, n, extra_edges, wmax=6, directed=False):
    """Connected random graph: spanning tree plus extra random edges."""
    edges = []
    seen = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v))
        seen.add((min(u, v), max(u, v)))
    tries = 0
    while len(edges) < n - 1 + extra_edges and tries < 200:
        tries += 1
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or (min(u, v), max(u, v)) in seen:
            continue
        seen.add((min(u, v), max(u, v)))
        edges.append((u, v))
    return WeightedGraph.build(
        n,
        edges,
        node_weights=[rng.randint(1, wmax) for _ in range(n)],
        edge_weights=[rng.randint(1, wmax) for _ in edges],
        directed=directed,
    )


class TestBuild:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            WeightedGraph.build(2, [(0, 0)])

    def test_rejects_parallel(self):
        with pytest.raises(ValueError):
            WeightedGraph.build(2, [(0, 1), (1, 0)])

    def test_directed_antiparallel_ok(self):
        g = WeightedGraph.build(2, [(0, 1), (1, 0)], directed=True)
        assert len(g.edges) == 2

    def test_rejects_zero_weight(self):
        with pytest.raises(BoundsError):
            WeightedGraph.build(2, [(0, 1)], edge_weights=[0])

    def test_rejects_float_weight(self):
        with pytest.raises(BoundsError):
            WeightedGraph.build(2, [(0, 1)], edge_weights=[1.5])

    def test_inf_weight_ok(self):
        g = WeightedGraph.build(2, [(0, 1)], edge_weights=[INF])
        assert g.edge_weights[0] == INF

    def test_rejects_huge_total(self):
        with pytest.raises(BoundsError):
            WeightedGraph.build(2, [(0, 1)], edge_weights=[2**62])

    def test_components(self):
        g = WeightedGraph.build(4, [(0, 1), (2, 3)])
        assert g.components() == ((0, 1), (2, 3))


class TestMinEdgeCut:
    def test_single_edge(self):
        # only separator is the edge itself
        g = WeightedGraph.build(2, [(0, 1)], edge_weights=[5])
        sol = min_st_edge_cut(g, [0], [1])
        assert sol.weight == 5
        assert sol.members == (0,)
        assert sol.components == ((0,), (1,))

    def test_k4_unit(self):
        # brute force over all 2^6 edge subsets gives 3
        edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        g = WeightedGraph.build(4, edges)
        sol = min_st_edge_cut(g, [0], [3])
        assert sol.weight == 3

    def test_two_disjoint_paths(self):
        # paths of weights (2,3) and (4,1): take the min edge of each, 2+1
        g = WeightedGraph.build(
            4, [(0, 2), (2, 1), (0, 3), (3, 1)], edge_weights=[2, 3, 4, 1]
        )
        sol = min_st_edge_cut(g, [0], [1])
        assert sol.weight == 3
        assert sol.members == (0, 3)

    def test_inf_edge_never_cut(self):
        g = WeightedGraph.build(3, [(0, 1), (1, 2)], edge_weights=[INF, 4])
        sol = min_st_edge_cut(g, [0], [2])
        assert sol.members == (1,)

    def test_no_finite_cut(self):
        g = WeightedGraph.build(2, [(0, 1)], edge_weights=[INF])
        with pytest.raises(NoFiniteCut):
            min_st_edge_cut(g, [0], [1])

    def test_already_disconnected(self):
        g = WeightedGraph.build(3, [(0, 1)])
        sol = min_st_edge_cut(g, [0], [2])
        assert sol.weight == 0 and sol.members == ()

    def test_directed_respects_orientation(self):
        # arc 1->0 cannot carry flow 0->1, so cutting just 0->1 suffices
        g = WeightedGraph.build(
            3, [(0, 1), (1, 0), (0, 2), (2, 1)], edge_weights=[1, 9, 3, 3], directed=True
        )
        sol = min_st_edge_cut(g, [0], [1])
        assert sol.weight == brute_min_edge_cut_weight(g, [0], [1]) == 4

    def test_matches_bruteforce_random(self):
        rng = random.Random(7)
        for _ in range(40):
            n = rng.randint(3, 8)
            g = random_graph(rng, n, rng.randint(0, 5), directed=rng.random() < 0.3)
            s, t = rng.sample(range(n), 2)
            want = brute_min_edge_cut_weight(g, [s], [t])
            sol = min_st_edge_cut(g, [s], [t])
            assert sol.weight == want
            # returned members really separate s from t
            assert t not in g.reachable([s], removed_edges=frozenset(sol.members))

    def test_lexicographic_tie_break(self):
        # two equal-weight cuts {0} and {1}: pick the smaller edge id
        g = WeightedGraph.build(3, [(0, 1), (1, 2)], edge_weights=[2, 2])
        sol = min_st_edge_cut(g, [0], [2])
        assert sol.members == (0,)

    def test_maxflow_equals_mincut_random(self):
        rng = random.Random(11)
        for _ in range(30):
            n = rng.randint(3, 9)
            g = random_graph(rng, n, rng.randint(0, 6))
            s, t = rng.sample(range(n), 2)
            assert max_flow_value(g, [s], [t]) == min_st_edge_cut(g, [s], [t]).weight

    def test_maxflow_duality_up_to_fifty_nodes(self):
        rng = random.Random(13)
        for n in (20, 35, 50):
            g = random_graph(rng, n, n, wmax=9)
            s, t = rng.sample(range(n), 2)
            assert max_flow_value(g, [s], [t]) == min_st_edge_cut(g, [s], [t]).weight


class TestMinNodeCut:
    def test_single_internal_node(self):
        g = WeightedGraph.build(3, [(0, 1), (1, 2)], node_weights=[1, 7, 1])
        sol = min_st_node_cut(g, [0], [2])
        assert sol.weight == 7 and sol.members == (1,)

    def test_two_parallel_internal_nodes(self):
        # both branches must be broken: weight 2 + 5
        g = WeightedGraph.build(
            4, [(0, 1), (1, 3), (0, 2), (2, 3)], node_weights=[1, 2, 5, 1]
        )
        sol = min_st_node_cut(g, [0], [3])
        assert sol.weight == 7 and sol.members == (1, 2)

    def test_grid_corner_to_corner(self):
        # 3x3 grid, unit node weights: brute force gives 2
        edges = []
        for r in range(3):
            for c in range(3):
                v = 3 * r + c
                if c < 2:
                    edges.append((v, v + 1))
                if r < 2:
                    edges.append((v, v + 3))
        g = WeightedGraph.build(9, edges)
        sol = min_st_node_cut(g, [0], [8])
        assert sol.weight == brute_min_node_cut_weight(g, [0], [8]) == 2

    def test_adjacent_terminals(self):
        g = WeightedGraph.build(2, [(0, 1)])
        with pytest.raises(NoFiniteCut):
            min_st_node_cut(g, [0], [1])

    def test_protected_nodes_not_cut(self):
        # chain 0-1-2-3: cutting {1} is cheapest, but protecting 1 forces {2}
        g = WeightedGraph.build(4, [(0, 1), (1, 2), (2, 3)], node_weights=[1, 1, 5, 1])
        assert min_st_node_cut(g, [0], [3]).members == (1,)
        sol = min_st_node_cut(g, [0], [3], protected=[1])
        assert sol.members == (2,) and sol.weight == 5

    def test_matches_bruteforce_random(self):
        rng = random.Random(23)
        for _ in range(40):
            n = rng.randint(4, 8)
            g = random_graph(rng, n, rng.randint(0, 4))
            s, t = rng.sample(range(n), 2)
            want = brute_min_node_cut_weight(g, [s], [t])
            if want == INF:
                with pytest.raises(NoFiniteCut):
                    min_st_node_cut(g, [s], [t])
                continue
            sol = min_st_node_cut(g, [s], [t])
            assert sol.weight == want
            assert t not in g.reachable([s], removed_nodes=frozenset(sol.members))

    def test_minimality_of_returned_set(self):
        rng = random.Random(5)
        for _ in range(20):
            n = rng.randint(4, 8)
            g = random_graph(rng, n, rng.randint(0, 4))
            s, t = rng.sample(range(n), 2)
            try:
                sol = min_st_node_cut(g, [s], [t])
            except NoFiniteCut:
                continue
            for drop in sol.members:
                keep = frozenset(m for m in sol.members if m != drop)
                assert t in g.reachable([s], removed_nodes=keep)


class TestShrink:
    def test_path_no_parallel(self):
        g = WeightedGraph.build(3, [(0, 1), (1, 2)], edge_weights=[4, 9])
        res = shrink_components(g, [{0, 1}])
        assert res.graph.n == 2
        assert len(res.graph.edges) == 1
        assert res.graph.edge_weights[0] == 9
        assert res.node_map[0] == res.node_map[1]

    def test_parallel_edges_get_relay(self):
        # triangle {0,1,2} plus edges 0-3 and 1-3; shrinking the triangle
        # would create two parallel edges to 3, so a relay node appears
        g = WeightedGraph.build(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)])
        res = shrink_components(g, [{0, 1, 2}])
        sg = res.graph
        assert sg.n == 3  # node 3, the shrunk node, one relay
        relay = 2
        assert sg.node_weights[relay] == INF
        comp_node = res.node_map[0]
        assert sg.has_edge(comp_node, res.node_map[3])
        assert sg.has_edge(comp_node, relay) and sg.has_edge(relay, res.node_map[3])
        # both relay half-edges carry the replaced edge's weight and map back to it
        orig = {res.edge_map[e] for e in range(len(sg.edges))}
        assert orig == {3, 4}

    def test_rejects_disconnected_component(self):
        g = WeightedGraph.build(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedComponent):
            shrink_components(g, [{0, 2}])

    def test_size_decreases(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_graph(rng, rng.randint(4, 9), rng.randint(0, 5))
            comp = sorted(g.reachable([0]))[:2]
            if len(comp) < 2:
                continue
            if set(comp) != g.reachable([comp[0]], removed_nodes=frozenset(range(g.n)) - set(comp)):
                continue
            res = shrink_components(g, [comp])
            survivors = res.graph.n - sum(1 for w in res.graph.node_weights if w == INF)
            assert survivors < g.n

    def test_preserves_group_cut_optimum(self):
        # cut values around a shrunk group match the group version exactly
        rng = random.Random(91)
        checked = 0
        while checked < 20:
            n = rng.randint(5, 8)
            g = random_graph(rng, n, rng.randint(1, 5))
            nodes = list(range(n))
            rng.shuffle(nodes)
            comp = nodes[:2]
            rest = [v for v in nodes[2:]]
            if len(rest) < 2:
                continue
            induced = g.reachable(
                [comp[0]], removed_nodes=frozenset(range(g.n)) - set(comp)
            )
            if induced != set(comp):
                continue
            s, t = rest[0], rest[1]
            res = shrink_components(g, [comp])
            want = brute_cpmc_weight(g, [comp[0], comp[1], s], [t], "edge")
            got = brute_cpmc_weight(
                res.graph, [res.node_map[comp[0]], res.node_map[s]], [res.node_map[t]], "edge"
            )
            assert got == want
            checked += 1
