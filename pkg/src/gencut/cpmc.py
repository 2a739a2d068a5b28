"""Connectivity-preserving cuts: instance model, feasibility, classifier, exact oracle.

A connectivity-preserving cut separates a source (and its partners) from
the destinations while the source stays connected to every partner. The
exact solvers here are enumerative oracles meant for desk-scale
instances; they refuse to run past a configurable candidate bound.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .errors import InstanceTooLarge, NoFiniteCut
from .graph import INF, CutSolution, WeightedGraph, _edge_cut_weight, _lex_min_members

#: Cap on enumerated candidates (side assignments, node subsets, or
#: protected paths, depending on the solver) before the oracle refuses.
ORACLE_LIMIT = 1 << 20


@dataclass(frozen=True)
class CpmcInstance:
    """A connectivity-preserving cut instance.

    ``source`` must remain connected to every node in ``partners`` while
    all of them lose their paths to/from ``destinations``. With
    ``preserve_destination_side`` the destination list is a partner pair
    of its own that must also stay internally connected (the two-pair
    variant used by the planar transformers).

    Directed instances follow the one-way reading: no directed path from
    any destination to the source side may survive, and a directed path
    between source and partner in at least one direction must survive.
    Only the single-partner edge-cut form is defined for digraphs.
    """

    graph: WeightedGraph
    source: int
    partners: tuple[int, ...]
    destinations: tuple[int, ...]
    mode: str  # "node" | "edge"
    budget: int | None = None
    preserve_destination_side: bool = False
    provenance: tuple | None = None

    @classmethod
    def build(
        cls,
        graph: WeightedGraph,
        source: int,
        partners: Iterable[int],
        destinations: Iterable[int],
        mode: str,
        *,
        budget: int | None = None,
        preserve_destination_side: bool = False,
        provenance=None,
    ) -> "CpmcInstance":
        partners = tuple(partners)
        destinations = tuple(destinations)
        if mode not in ("node", "edge"):
            raise ValueError(f"mode must be 'node' or 'edge', got {mode!r}")
        if not partners or not destinations:
            raise ValueError("partners and destinations must be non-empty")
        terminals = [source, *partners, *destinations]
        if len(set(terminals)) != len(terminals):
            raise ValueError("source, partners and destinations must be pairwise distinct")
        for v in terminals:
            if not (0 <= v < graph.n):
                raise ValueError(f"terminal {v} outside 0..{graph.n - 1}")
        if graph.directed:
            if mode != "edge" or len(partners) != 1 or preserve_destination_side:
                raise ValueError(
                    "directed instances support only the single-partner edge-cut form"
                )
        if budget is not None and (not isinstance(budget, int) or budget < 1):
            raise ValueError(f"budget must be a positive integer, got {budget!r}")
        if provenance is not None:
            provenance = tuple(sorted(provenance.items())) if isinstance(provenance, dict) else tuple(provenance)
        return cls(
            graph,
            source,
            partners,
            destinations,
            mode,
            budget=budget,
            preserve_destination_side=preserve_destination_side,
            provenance=provenance,
        )

    @property
    def keep_nodes(self) -> tuple[int, ...]:
        return (self.source, *self.partners)


@dataclass(frozen=True)
class PartnerClassification:
    """The four cut values around a partner node and the induced verdict.

    ``guaranteed-preserving``: the joint minimum cut is cheaper than the
    two individual cuts combined, so it cannot split the pair.
    ``threshold``: individual cuts, joint cut, and preserving optimum all
    coincide. ``outer``: preservation costs strictly more than the two
    individual cuts together.
    """

    ce_s1t: int
    ce_s2t: int
    ce_joint: int
    cep: int
    verdict: str


# -- feasibility -------------------------------------------------------


def _inf_clusters(g: WeightedGraph) -> list[int]:
    """Union-find classes of nodes joined by INF edges (undirected)."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid, (u, v) in enumerate(g.edges):
        if g.edge_weights[eid] == INF:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    return [find(v) for v in range(g.n)]


def _poisoned_closure(g: WeightedGraph, dests: Iterable[int]) -> set[int]:
    """Destinations plus INF-weight nodes transitively adjacent to them.

    In node mode these nodes can never be cut away from the source side:
    touching one re-exposes a destination.
    """
    poisoned = set(dests)
    frontier = list(poisoned)
    while frontier:
        v = frontier.pop()
        for w in g.neighbors(v):
            if w not in poisoned and g.node_weights[w] == INF:
                poisoned.add(w)
                frontier.append(w)
    return poisoned


def cpmc_feasible(inst: CpmcInstance) -> bool:
    """True iff some finite cut satisfies separation and preservation.

    Node mode and the plain undirected/directed edge modes use exact
    polynomial tests; the two-pair edge variant falls back to the
    enumerative oracle.
    """
    g = inst.graph
    keep = inst.keep_nodes
    dests = inst.destinations
    if inst.mode == "node":
        poisoned = _poisoned_closure(g, dests)
        blocked = set(poisoned)
        for v in poisoned:
            blocked.update(g.neighbors(v))
        if any(v in blocked for v in keep):
            return False
        comp = g.reachable([keep[0]], removed_nodes=frozenset(blocked - {keep[0]}), directed=False)
        return all(v in comp for v in keep)
    if g.directed:
        # closure of destinations under INF out-arcs: these nodes are
        # stuck on the destination side of any finite cut
        closure = set(dests)
        frontier = list(dests)
        while frontier:
            v = frontier.pop()
            for w, eid in g._adj[v]:
                if g.edge_weights[eid] == INF and w not in closure:
                    closure.add(w)
                    frontier.append(w)
        if any(v in closure for v in keep):
            return False
        crossing = frozenset(
            eid for eid, (u, v) in enumerate(g.edges) if u in closure and v not in closure
        )
        fwd = g.reachable([inst.source], removed_edges=crossing)
        if inst.partners[0] in fwd:
            return True
        bwd = g.reachable([inst.partners[0]], removed_edges=crossing)
        return inst.source in bwd
    if inst.preserve_destination_side:
        return solve_cpmc_exact(inst).feasible
    cl = _inf_clusters(g)
    dest_clusters = {cl[v] for v in dests}
    if any(cl[v] in dest_clusters for v in keep):
        return False
    blocked = frozenset(v for v in range(g.n) if cl[v] in dest_clusters)
    comp = g.reachable([keep[0]], removed_nodes=blocked, directed=False)
    return all(v in comp for v in keep)


# -- exact solvers -----------------------------------------------------


def _solve_edge_undirected(
    g: WeightedGraph,
    keep: tuple[int, ...],
    dests: tuple[int, ...],
    preserve_dest: bool,
    limit: int,
) -> CutSolution:
    """Enumerate side assignments of INF-edge clusters.

    An optimal preserving edge cut is the crossing set of the partition
    (component of the kept nodes, rest), so scanning all INF-closed side
    assignments is exhaustive. INF edges never cross by construction.
    """
    cl = _inf_clusters(g)
    keep_cl = {cl[v] for v in keep}
    dest_cl = {cl[v] for v in dests}
    if keep_cl & dest_cl:
        return CutSolution.infeasible_for(g, "edge")
    free = sorted(set(cl) - keep_cl - dest_cl)
    if 1 << len(free) > limit:
        raise InstanceTooLarge(
            f"{len(free)} free clusters exceed the {limit} assignment bound"
        )
    finite_edges = [
        (eid, cl[u], cl[v], g.edge_weights[eid])
        for eid, (u, v) in enumerate(g.edges)
        if cl[u] != cl[v]
    ]
    best: tuple | None = None
    keep_set = set(keep)
    dest_set = set(dests)
    for bits in range(1 << len(free)):
        side = set(keep_cl)
        for i, c in enumerate(free):
            if bits >> i & 1:
                side.add(c)
        members = []
        weight = 0
        ok = True
        for eid, cu, cv, w in finite_edges:
            if (cu in side) != (cv in side):
                if w == INF:
                    ok = False
                    break
                weight += w
                members.append(eid)
        if not ok or (best is not None and (weight, members) >= best[:2]):
            continue
        removed = frozenset(members)
        comp = g.reachable([keep[0]], removed_edges=removed, directed=False)
        if not keep_set <= comp:
            continue
        if preserve_dest:
            dcomp = g.reachable([dests[0]], removed_edges=removed, directed=False)
            if not dest_set <= dcomp:
                continue
        cand = (weight, members)
        if best is None or cand < best[:2]:
            best = (weight, members)
    if best is None:
        return CutSolution.infeasible_for(g, "edge")
    return CutSolution.from_members(g, "edge", best[1])


def _simple_paths_edges(g: WeightedGraph, a: int, b: int, limit: int):
    """Simple directed a->b paths as edge-id tuples, lexicographic DFS."""
    out = []
    on_path = {a}
    edges_taken: list[int] = []

    def walk(v):
        if len(out) > limit:
            raise InstanceTooLarge(f"more than {limit} preserved-path candidates")
        if v == b:
            out.append(tuple(edges_taken))
            return
        for w, eid in g._adj[v]:
            if w in on_path:
                continue
            on_path.add(w)
            edges_taken.append(eid)
            walk(w)
            on_path.remove(w)
            edges_taken.pop()

    walk(a)
    return out


def _solve_edge_directed(
    g: WeightedGraph,
    source: int,
    partner: int,
    dests: tuple[int, ...],
    limit: int,
) -> CutSolution:
    """Min over surviving-path choices of the path-protected one-way cut.

    Any feasible cut leaves some directed source-partner path (in one
    direction) intact; conversely protecting a concrete path and cutting
    everything from the destinations to the pair is feasible. Scanning
    all simple paths is therefore exact.
    """
    sinks = frozenset((source, partner))
    srcs = frozenset(dests)
    paths = _simple_paths_edges(g, source, partner, limit)
    paths += _simple_paths_edges(g, partner, source, limit)
    if not paths:
        return CutSolution.infeasible_for(g, "edge")
    best_w = INF
    winners = []
    for path in paths:
        w, big = _edge_cut_weight(g, srcs, sinks, protected=frozenset(path))
        if w >= big:
            continue
        if w < best_w:
            best_w, winners = w, [path]
        elif w == best_w:
            winners.append(path)
    if best_w == INF:
        return CutSolution.infeasible_for(g, "edge")
    best_members = None
    for path in winners:
        prot = frozenset(path)

        def query(removed, extra):
            got, _ = _edge_cut_weight(g, srcs, sinks, removed=removed, protected=prot | extra)
            return got

        cands = [e for e in range(len(g.edges)) if e not in prot]
        members = _lex_min_members(cands, lambda e: g.edge_weights[e], best_w, query)
        if best_members is None or tuple(sorted(members)) < best_members:
            best_members = tuple(sorted(members))
    return CutSolution.from_members(g, "edge", best_members)


def _solve_node(
    g: WeightedGraph,
    keep: tuple[int, ...],
    dests: tuple[int, ...],
    limit: int,
) -> CutSolution:
    """Candidate subsets in nondecreasing weight order with early exit."""
    terminals = set(keep) | set(dests)
    cands = sorted(
        (v for v in range(g.n) if v not in terminals and g.node_weights[v] != INF),
        key=lambda v: (g.node_weights[v], v),
    )
    if 1 << len(cands) > limit:
        raise InstanceTooLarge(f"{len(cands)} candidates exceed the {limit} subset bound")
    keep_set, dest_set = set(keep), set(dests)

    def feasible(removed: frozenset) -> bool:
        comp = g.reachable([keep[0]], removed_nodes=removed, directed=False)
        return keep_set <= comp and not (comp & dest_set)

    if feasible(frozenset()):
        return CutSolution.from_members(g, "node", ())
    if not cands:
        return CutSolution.infeasible_for(g, "node")
    weights = [g.node_weights[v] for v in cands]
    # subset stream: each item is (total weight, indices); extending or
    # replacing the largest index enumerates every subset once, by weight
    heap = [(weights[0], (0,))]
    ties: list[tuple[int, ...]] = []
    best_w = None
    while heap:
        w, idxs = heapq.heappop(heap)
        if best_w is not None and w > best_w:
            break
        members = frozenset(cands[i] for i in idxs)
        if feasible(members):
            best_w = w
            ties.append(tuple(sorted(members)))
        last = idxs[-1]
        if last + 1 < len(cands):
            heapq.heappush(heap, (w + weights[last + 1], idxs + (last + 1,)))
            heapq.heappush(
                heap, (w - weights[last] + weights[last + 1], idxs[:-1] + (last + 1,))
            )
    if best_w is None:
        return CutSolution.infeasible_for(g, "node")
    return CutSolution.from_members(g, "node", min(ties))


def solve_cpmc_exact(inst: CpmcInstance, *, limit: int = ORACLE_LIMIT) -> CutSolution:
    """Exact optimum for a connectivity-preserving cut instance.

    Infeasible instances come back as a tagged verdict (``feasible``
    False, weight INF) rather than an exception: reductions treat
    infeasibility as data. Raises InstanceTooLarge past the oracle bound.
    """
    g = inst.graph
    if inst.mode == "node":
        sol = _solve_node(g, inst.keep_nodes, inst.destinations, limit)
    elif g.directed:
        sol = _solve_edge_directed(g, inst.source, inst.partners[0], inst.destinations, limit)
    else:
        sol = _solve_edge_undirected(
            g, inst.keep_nodes, inst.destinations, inst.preserve_destination_side, limit
        )
    return sol


def solve_generalized_cpmc_exact(
    g: WeightedGraph,
    keep_groups: Iterable[Iterable[int]],
    dest_group: Iterable[int],
    mode: str,
    *,
    limit: int = ORACLE_LIMIT,
) -> CutSolution:
    """Exact optimum of the grouped variant: whole node sets as terminals.

    All nodes across ``keep_groups`` must stay mutually connected and be
    separated from every node of ``dest_group``. Group members are never
    cut candidates. Undirected only.
    """
    if g.directed:
        raise ValueError("grouped instances are undirected")
    keep = tuple(dict.fromkeys(v for grp in keep_groups for v in grp))
    dests = tuple(dict.fromkeys(dest_group))
    if set(keep) & set(dests):
        raise ValueError("keep groups and destination group overlap")
    if mode == "node":
        return _solve_node(g, keep, dests, limit)
    return _solve_edge_undirected(g, keep, dests, False, limit)


def meets_budget(inst: CpmcInstance, solution: CutSolution | None = None) -> bool:
    """Decision form: does an optimal cut fit the instance budget?"""
    if inst.budget is None:
        raise ValueError("instance has no budget")
    sol = solution if solution is not None else solve_cpmc_exact(inst)
    return sol.feasible and sol.weight <= inst.budget


# -- partner classification --------------------------------------------


def classify_partner(g: WeightedGraph, s1: int, s2: int, t: int) -> PartnerClassification:
    """Classify s2 relative to s1 and destination t (undirected, edge mode).

    Computes the two individual minimum cut values, the joint value, and
    the preserving optimum, then applies the trichotomy: a strict gap
    between the individual sum and the joint value guarantees
    preservation for free; equality of all four marks a threshold node;
    a preserving optimum above the individual sum marks an outer point.
    """
    if g.directed:
        raise ValueError("partner classification is defined on undirected graphs")
    if len({s1, s2, t}) != 3:
        raise ValueError("s1, s2, t must be distinct")

    def cut_val(sources):
        w, big = _edge_cut_weight(g, frozenset(sources), frozenset([t]))
        if w >= big:
            raise NoFiniteCut("no finite separator exists")
        return w

    ce_s1t = cut_val([s1])
    ce_s2t = cut_val([s2])
    ce_joint = cut_val([s1, s2])
    sol = solve_cpmc_exact(CpmcInstance.build(g, s1, [s2], [t], "edge"))
    if not sol.feasible:
        raise NoFiniteCut("no preserving cut exists")
    cep = sol.weight
    if ce_s1t + ce_s2t > ce_joint:
        verdict = "guaranteed-preserving"
    elif cep == ce_joint:
        verdict = "threshold"
    else:
        verdict = "outer"
    return PartnerClassification(ce_s1t, ce_s2t, ce_joint, cep, verdict)
