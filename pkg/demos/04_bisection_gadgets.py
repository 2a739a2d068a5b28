"""
Threshold edge cuts through bisection gadgets
=============================================

Pinning each service (and the client) to a heavy clique turns threshold
edge cuts into a family of minimum bisections: the cliques move as
blocks, and sweeping the client-block size shifts the balance point
until some bisection splits along an optimal threshold cut.
"""

import random

from gencut import TmcInstance, WeightedGraph, min_bisection, solve_tmc_exact
from gencut.bisection import bisection_j_range, build_bisection_gadget, solve_tmec_via_bisection

rng = random.Random(4)
edges = set()
for v in range(1, 5):
    edges.add((rng.randrange(v), v))
edges |= {(0, 2), (1, 4)}
g = WeightedGraph.build(5, sorted(edges), edge_weights=[rng.randint(1, 3) for _ in edges])
inst = TmcInstance.build(g, [1, 2, 4], 0, 2, "edge")

print(f"base graph: {len(g.edges)} edges, services {inst.services}, client {inst.client}")
print(f"oracle optimum: {solve_tmc_exact(inst).weight}")

# one member of the gadget family, small scales so everything is visible
gadget = build_bisection_gadget(inst, 1, 5, size_scale=2, cost_scale=50)
print(f"gadget graph for (i=1, j=5): {gadget.graph.n} nodes, {len(gadget.graph.edges)} edges")
(side_a, side_b), w = min_bisection(gadget.graph)
print(f"its minimum bisection weight: {w} (gadget edges cost 50, never cut)")

print(f"client-block sizes swept: {list(bisection_j_range(inst, 2))}")
exact = solve_tmec_via_bisection(inst, backend="exact", size_scale=2)
print(f"scan with exact bisections: weight {exact.weight}, edges {exact.members}")
local = solve_tmec_via_bisection(inst, backend="local-search", size_scale=2)
print(f"scan with local search:     weight {local.weight}, edges {local.members}")
