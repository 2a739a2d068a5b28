"""
Planar machinery: unique cuts, diversion, side-constrained paths
================================================================

Weight perturbation makes every cut weight distinct without disturbing
their order, which pins down a canonical component around each node.
Two transformers ride on the two-pair solver: network diversion and the
shortest path forced to run between two given nodes.
"""

from gencut import WeightedGraph
from gencut.planar import (
    build_embedding,
    path_sides,
    perturb,
    principal_cut_component,
    solve_network_diversion,
    solve_two_node_lcsp,
)


def grid(rows, cols, weights=None):
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = cols * r + c
            if c < cols - 1:
                edges.append((v, v + 1))
            if r < rows - 1:
                edges.append((v, v + cols))
    return WeightedGraph.build(rows * cols, edges, edge_weights=weights)


g = grid(3, 3)
emb = build_embedding(g)
print(f"3x3 grid: {len(emb.faces)} faces, outer boundary {emb.faces[emb.outer_face]}")

pw = perturb(g, "edge")
print(f"perturbation scale 2^{len(g.edges)} = {pw.scale}")
for v in (0, 1, 4):
    comp = principal_cut_component(g, pw, v, 8)
    print(f"  principal component of {v} against 8: {comp}")

# diversion: force all 0 -> 8 traffic over the center-right edge (4, 5)
sol = solve_network_diversion(g, 0, 8, (4, 5))
print(f"\ndiversion cut: edges {sol.members}, weight {sol.weight}")
print("  every surviving 0-8 walk now crosses (4, 5)")

# the shortest 3 -> 5 path with node 1 and node 7 on opposite sides
path = solve_two_node_lcsp(emb, 3, 5, 1, 7)
print(f"\nside-constrained path: {path}")
above, below = path_sides(
    emb, 3, 5, [g.edge_id(a, b) for a, b in zip(path, path[1:])]
)
print(f"  side split around it: {above} vs {below}")
