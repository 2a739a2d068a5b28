"""
Shrinking preserved groups
==========================

When whole connected groups must stay together, each group can be
collapsed into a single node without changing any optimal cut value.
Parallel edges that would appear are re-routed through uncuttable relay
nodes carrying the original weights, so the graph stays simple.
"""

import random

from gencut import WeightedGraph, shrink_components, solve_generalized_cpmc_exact
from gencut.cpmc import CpmcInstance, solve_cpmc_exact

# triangle {0,1,2} with two links to node 3: shrinking the triangle would
# create parallel edges, so a relay node appears
g = WeightedGraph.build(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)], edge_weights=[2, 2, 2, 3, 4])
res = shrink_components(g, [{0, 1, 2}])
print(f"shrunk graph: {res.graph.n} nodes, edges {res.graph.edges}")
print(f"  edge weights {res.graph.edge_weights}")
print(f"  node map {dict(res.node_map)}  (relay nodes carry INF weight)")

# value preservation on random instances: the grouped optimum equals the
# optimum after shrinking the groups to single terminals
rng = random.Random(7)
for trial in range(5):
    n = 8
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    while len(edges) < 12:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    g = WeightedGraph.build(n, sorted(edges), edge_weights=[rng.randint(1, 5) for _ in edges])
    grp1, grp2, dest = [0], [1], [2]
    grouped = solve_generalized_cpmc_exact(g, [grp1, grp2], dest, "edge")
    res = shrink_components(g, [grp1, grp2, dest])
    inst = CpmcInstance.build(
        res.graph, res.node_map[0], [res.node_map[1]], [res.node_map[2]], "edge"
    )
    shrunk = solve_cpmc_exact(inst)
    a = grouped.weight if grouped.feasible else "infeasible"
    b = shrunk.weight if shrunk.feasible else "infeasible"
    print(f"trial {trial}: grouped optimum {a}, shrunk optimum {b}")
    assert a == b
