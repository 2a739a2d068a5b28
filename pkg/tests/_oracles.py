"""Independent brute-force oracles used to check the library's solvers.

Everything here works by exhaustive enumeration and deliberately avoids
the code paths under test (no max-flow, no simplex, no gadget logic).
"""

from __future__ import annotations

import itertools
import math
from collections import deque

INF = math.inf


def reachable(n, adj, starts, removed_nodes=(), removed_edges=()):
    removed_nodes = set(removed_nodes)
    removed_edges = set(removed_edges)
    seen = set(s for s in starts if s not in removed_nodes)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w, eid in adj[v]:
            if eid in removed_edges or w in removed_nodes or w in seen:
                continue
            seen.add(w)
            queue.append(w)
    return seen


def out_adjacency(g):
    adj = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        adj[u].append((v, eid))
        if not g.directed:
            adj[v].append((u, eid))
    return adj


def undirected_adjacency(g):
    adj = [[] for _ in range(g.n)]
    for eid, (u, v) in enumerate(g.edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    return adj


def brute_min_edge_cut_weight(g, sources, sinks):
    """Exhaustive minimum s-t edge cut weight via 2^free side assignments.

    Every inclusion-minimal edge separator is the crossing set of some
    source-side subset, so scanning all subsets is exhaustive. Directed
    graphs cut only arcs leaving the source side.
    """
    sources, sinks = set(sources), set(sinks)
    free = [v for v in range(g.n) if v not in sources and v not in sinks]
    best = INF
    for bits in range(1 << len(free)):
        side = set(sources)
        for i, v in enumerate(free):
            if bits >> i & 1:
                side.add(v)
        w = 0
        for eid, (u, v) in enumerate(g.edges):
            crosses = (u in side) != (v in side) if not g.directed else (u in side and v not in side)
            if crosses:
                w += g.edge_weights[eid]
                if w >= best:
                    break
        else:
            best = min(best, w)
    return best


def brute_min_node_cut_weight(g, sources, sinks, protected=()):
    """Exhaustive minimum s-t node cut weight over subsets of candidates."""
    sources, sinks = set(sources), set(sinks)
    banned = sources | sinks | set(protected)
    cands = [v for v in range(g.n) if v not in banned and g.node_weights[v] != INF]
    adj = out_adjacency(g)
    best = INF
    for r in range(len(cands) + 1):
        for combo in itertools.combinations(cands, r):
            w = sum(g.node_weights[v] for v in combo)
            if w >= best:
                continue
            if not (reachable(g.n, adj, sources, removed_nodes=combo) & sinks):
                best = w
    return best


def brute_cpmc_weight(g, keep, dests, mode, preserve_dest=False):
    """Exhaustive optimum for connectivity-preserving cuts (weight or INF).

    ``keep`` nodes must stay mutually connected and lose all paths to/from
    ``dests`` (for digraphs: no directed path from any dest to any keep
    node, and some directed path between consecutive keep nodes survives
    in one direction or the other).
    """
    keep, dests = list(keep), list(dests)
    adj = out_adjacency(g)
    uadj = undirected_adjacency(g)

    def feasible_after(removed_nodes=(), removed_edges=()):
        if g.directed:
            hit = reachable(g.n, adj, dests, removed_nodes, removed_edges)
            if hit & set(keep):
                return False
            a, b = keep[0], keep[1] if len(keep) > 1 else keep[0]
            fwd = reachable(g.n, adj, [a], removed_nodes, removed_edges)
            bwd = reachable(g.n, adj, [b], removed_nodes, removed_edges)
            return b in fwd or a in bwd
        comp = reachable(g.n, uadj, [keep[0]], removed_nodes, removed_edges)
        if any(v not in comp for v in keep):
            return False
        if comp & set(dests):
            return False
        if preserve_dest:
            dcomp = reachable(g.n, uadj, [dests[0]], removed_nodes, removed_edges)
            if any(v not in dcomp for v in dests):
                return False
        return True

    best = INF
    if mode == "node":
        banned = set(keep) | set(dests)
        cands = [v for v in range(g.n) if v not in banned and g.node_weights[v] != INF]
        for r in range(len(cands) + 1):
            for combo in itertools.combinations(cands, r):
                w = sum(g.node_weights[v] for v in combo)
                if w < best and feasible_after(removed_nodes=combo):
                    best = w
        return best
    cands = [e for e in range(len(g.edges)) if g.edge_weights[e] != INF]
    for r in range(len(cands) + 1):
        for combo in itertools.combinations(cands, r):
            w = sum(g.edge_weights[e] for e in combo)
            if w < best and feasible_after(removed_edges=combo):
                best = w
    return best


def brute_tmc_weight(g, services, client, threshold, mode):
    """Exhaustive threshold-cut optimum: >= threshold services cut off."""
    services = list(services)
    adj = out_adjacency(g)
    best = INF

    def disconnected(removed_nodes=(), removed_edges=()):
        hit = reachable(g.n, adj, [client], removed_nodes, removed_edges)
        return sum(1 for s in services if s not in hit)

    if mode == "node":
        banned = set(services) | {client}
        cands = [v for v in range(g.n) if v not in banned and g.node_weights[v] != INF]
        for r in range(len(cands) + 1):
            for combo in itertools.combinations(cands, r):
                w = sum(g.node_weights[v] for v in combo)
                if w < best and disconnected(removed_nodes=combo) >= threshold:
                    best = w
        return best
    cands = [e for e in range(len(g.edges)) if g.edge_weights[e] != INF]
    for r in range(len(cands) + 1):
        for combo in itertools.combinations(cands, r):
            w = sum(g.edge_weights[e] for e in combo)
            if w < best and disconnected(removed_edges=combo) >= threshold:
                best = w
    return best


def brute_bisection(g):
    """Exhaustive minimum bisection (floor/ceil halves) weight."""
    n = g.n
    half = n // 2
    best = INF
    nodes = list(range(1, n))
    # side containing node 0 has ceil(n/2) or floor(n/2) nodes; try both
    sizes = {half, n - half}
    for size in sizes:
        for combo in itertools.combinations(nodes, size - 1):
            side = {0, *combo}
            w = sum(
                g.edge_weights[eid]
                for eid, (u, v) in enumerate(g.edges)
                if (u in side) != (v in side)
            )
            best = min(best, w)
    return best


def simple_paths(g, a, b, removed_edges=()):
    """All simple a->b paths as tuples of edge ids (direction respected)."""
    adj = out_adjacency(g)
    removed_edges = set(removed_edges)
    out = []
    path_nodes = [a]
    path_edges: list[int] = []

    def walk(v):
        if v == b:
            out.append(tuple(path_edges))
            return
        for w, eid in adj[v]:
            if eid in removed_edges or w in path_nodes:
                continue
            path_nodes.append(w)
            path_edges.append(eid)
            walk(w)
            path_nodes.pop()
            path_edges.pop()

    walk(a)
    return out


def brute_setcover(sets, weights):
    """Optimal weighted set cover (weight, chosen indices) or (INF, None)."""
    universe = set()
    for s in sets:
        universe |= set(s)
    best, best_sel = INF, None
    for r in range(len(sets) + 1):
        for combo in itertools.combinations(range(len(sets)), r):
            cov = set()
            for i in combo:
                cov |= set(sets[i])
            if cov == universe:
                w = sum(weights[i] for i in combo)
                if w < best:
                    best, best_sel = w, combo
    return best, best_sel


def covered_count(collection, chosen_elements):
    chosen = set(chosen_elements)
    return sum(1 for s in collection if set(s) <= chosen)


def brute_max_cover(collection, n_elements, n1):
    """Best fully-covered count over all element subsets of size n1."""
    best = 0
    for combo in itertools.combinations(range(n_elements), n1):
        best = max(best, covered_count(collection, combo))
    return best


def brute_min_cover(collection, m):
    """Smallest distinct-element union over all m-subset choices."""
    best = INF
    for combo in itertools.combinations(range(len(collection)), m):
        u = set()
        for i in combo:
            u |= set(collection[i])
        best = min(best, len(u))
    return best
