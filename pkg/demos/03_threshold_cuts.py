"""
Threshold cuts: isolating a client from l of k services
=======================================================

The exact oracle scans service subsets; the approximation solves a
fractional relaxation and rounds it, guaranteed within 2*sqrt(n) of the
optimum. On this star instance the two cheapest relays fall and the
ratio is exactly 1.
"""

from gencut import TmcInstance, WeightedGraph, solve_tmc_exact, solve_tmnc_lp
from gencut.tmc import build_tmnc_lp, tmnc_lp_lower_bound
from gencut.lp import solve_lp

# client 0 at the center; each service 5..8 sits behind its own relay
# with node weights 1, 2, 3, 4
edges = [(0, 1), (1, 5), (0, 2), (2, 6), (0, 3), (3, 7), (0, 4), (4, 8)]
g = WeightedGraph.build(9, edges, node_weights=[1, 1, 2, 3, 4, 1, 1, 1, 1])
inst = TmcInstance.build(g, [5, 6, 7, 8], 0, 2, "node")

exact = solve_tmc_exact(inst)
print(f"exact optimum: cut nodes {exact.members}, weight {exact.weight}")

rounded = solve_tmnc_lp(inst)
print(f"rounded cut:   cut nodes {rounded.members}, weight {rounded.weight}")
print(f"ratio: {rounded.weight / exact.weight:.2f}")

lp = solve_lp(build_tmnc_lp(inst))
print(f"relaxation value {lp.objective:.3f} <= optimum {exact.weight}")
print(f"lower-bound helper agrees: {tmnc_lp_lower_bound(inst):.3f}")

# per-service disconnection mass chosen by the relaxation
for s in inst.services:
    print(f"  Y_{s} = {lp[f'Y_{s}']:.3f}")
