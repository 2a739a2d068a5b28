"""
Connectivity-preserving cuts
============================

A plain minimum cut between two partner nodes and a third node may split
the partners. A preserving cut keeps them together, sometimes at a price.
This walk-through builds the smallest instructive instance, classifies
the partner, and compares the two optima.
"""

from gencut import WeightedGraph, classify_partner, min_st_edge_cut
from gencut.cpmc import CpmcInstance, solve_cpmc_exact

# Two arms hang off the destination t: t-a-s1 and t-b-s2. A cheap strap
# a-b is the only way the partners stay connected once t is sealed off.
#
#        t
#      5/ \5
#      a---b      (a-b costs 1)
#     1|   |1
#      s1  s2
g = WeightedGraph.build(
    5,
    [(0, 1), (1, 3), (0, 2), (2, 4), (1, 2)],
    edge_weights=[5, 1, 5, 1, 1],
)
t, a, b, s1, s2 = range(5)

plain = min_st_edge_cut(g, [s1, s2], [t])
print(f"plain joint cut: edges {plain.members}, weight {plain.weight}")
print(f"  components afterwards: {plain.components}")

c = classify_partner(g, s1, s2, t)
print(f"partner classification: {c.verdict}")
print(f"  individual cuts {c.ce_s1t} + {c.ce_s2t}, joint {c.ce_joint}, preserving {c.cep}")

inst = CpmcInstance.build(g, s1, [s2], [t], "edge")
preserving = solve_cpmc_exact(inst)
print(f"preserving cut: edges {preserving.members}, weight {preserving.weight}")
print(f"  components afterwards: {preserving.components}")

# The joint cut isolates both partner arms for 2, but s1 and s2 end up in
# different components. Keeping them together forces the two weight-5
# root edges: this partner is an outer point, and preservation costs 10.
