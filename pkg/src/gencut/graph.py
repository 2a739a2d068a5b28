"""Weighted graphs, connectivity queries, exact minimum s-t cuts, and component shrinking.

Node ids are dense integers ``0..n-1`` and edge ids index into the edge
tuple. ``INF`` marks uncuttable nodes or edges: they never appear as cut
members, and a separator that would need one raises :class:`NoFiniteCut`.
All values are immutable; every operation returns new objects, so shared
graphs are safe to use from multiple threads.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import BoundsError, DisconnectedComponent, NoFiniteCut

INF = math.inf

#: (sum of all weights)**2 must stay within signed 64-bit arithmetic.
MAX_WEIGHT_SUM = math.isqrt(2**63 - 1)


def _checked_weight(w, label: str):
    if w == INF:
        return INF
    if isinstance(w, bool) or not isinstance(w, int):
        raise BoundsError(f"{label} must be a positive integer or INF, got {w!r}")
    if w < 1:
        raise BoundsError(f"{label} must be >= 1, got {w}")
    return w


@dataclass(frozen=True)
class WeightedGraph:
    """Simple directed or undirected graph with positive integer or INF weights.

    Use :meth:`build` rather than the raw constructor; it validates ids,
    rejects self-loops and parallel edges, and enforces the arithmetic
    bound on total weight.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    node_weights: tuple
    edge_weights: tuple
    directed: bool = False

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        *,
        node_weights=None,
        edge_weights=None,
        directed: bool = False,
    ) -> "WeightedGraph":
        if n < 0:
            raise ValueError(f"node count must be non-negative, got {n}")
        norm_edges = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) references a node outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at node {u} is not allowed")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"parallel edge ({u},{v}) is not allowed")
            seen.add(key)
            norm_edges.append(key if not directed else (u, v))
        m = len(norm_edges)
        nw = tuple(node_weights) if node_weights is not None else (1,) * n
        ew = tuple(edge_weights) if edge_weights is not None else (1,) * m
        if len(nw) != n:
            raise ValueError(f"expected {n} node weights, got {len(nw)}")
        if len(ew) != m:
            raise ValueError(f"expected {m} edge weights, got {len(ew)}")
        nw = tuple(_checked_weight(w, f"node weight of {i}") for i, w in enumerate(nw))
        ew = tuple(_checked_weight(w, f"weight of edge {i}") for i, w in enumerate(ew))
        total = sum(w for w in nw if w != INF) + sum(w for w in ew if w != INF)
        if total > MAX_WEIGHT_SUM:
            raise BoundsError(
                f"total finite weight {total} exceeds the arithmetic bound {MAX_WEIGHT_SUM}"
            )
        return cls(n, tuple(norm_edges), nw, ew, directed)

    # -- derived views -------------------------------------------------

    @cached_property
    def _adj(self) -> tuple:
        """Outgoing (u -> v) adjacency; both directions when undirected."""
        adj = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            if not self.directed:
                adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _in_adj(self) -> tuple:
        if not self.directed:
            return self._adj
        adj = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _edge_index(self) -> Mapping[tuple[int, int], int]:
        idx = {}
        for eid, (u, v) in enumerate(self.edges):
            idx[(u, v)] = eid
            if not self.directed:
                idx[(v, u)] = eid
        return idx

    def edge_id(self, u: int, v: int) -> int:
        """Id of the edge (arc) u-v; KeyError if absent."""
        return self._edge_index[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_index

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self._adj[v])

    def total_finite_weight(self) -> int:
        return sum(w for w in self.node_weights if w != INF) + sum(
            w for w in self.edge_weights if w != INF
        )

    # -- connectivity --------------------------------------------------

    def reachable(
        self,
        starts: Iterable[int],
        *,
        removed_nodes: frozenset = frozenset(),
        removed_edges: frozenset = frozenset(),
        directed: bool | None = None,
    ) -> set[int]:
        """Nodes reachable from ``starts`` after the given removals.

        ``directed=False`` forces undirected traversal even on digraphs
        (weak connectivity); the default follows the graph's own flag.
        """
        follow_direction = self.directed if directed is None else directed
        seen = set()
        queue = deque()
        for s in starts:
            if s not in removed_nodes and s not in seen:
                seen.add(s)
                queue.append(s)
        use_in = not follow_direction and self.directed
        while queue:
            v = queue.popleft()
            nbr_lists = (self._adj[v], self._in_adj[v]) if use_in else (self._adj[v],)
            for lst in nbr_lists:
                for w, eid in lst:
                    if eid in removed_edges or w in removed_nodes or w in seen:
                        continue
                    seen.add(w)
                    queue.append(w)
        return seen

    def components(
        self,
        *,
        removed_nodes: frozenset = frozenset(),
        removed_edges: frozenset = frozenset(),
    ) -> tuple[tuple[int, ...], ...]:
        """Connected components of the surviving nodes (weak, for digraphs)."""
        out = []
        assigned = set(removed_nodes)
        for v in range(self.n):
            if v in assigned:
                continue
            comp = self.reachable(
                [v],
                removed_nodes=frozenset(removed_nodes),
                removed_edges=frozenset(removed_edges),
                directed=False,
            )
            assigned |= comp
            out.append(tuple(sorted(comp)))
        return tuple(out)


@dataclass(frozen=True)
class CutSolution:
    """A node or edge cut plus the component structure it induces.

    ``weight`` is the sum of the member weights. An infeasible verdict is
    tagged with ``feasible=False``, empty members, and weight ``INF``.
    """

    kind: str  # "node" | "edge"
    members: tuple[int, ...]
    weight: int | float
    components: tuple[tuple[int, ...], ...]
    feasible: bool = True

    @classmethod
    def from_members(
        cls, g: WeightedGraph, kind: str, members: Iterable[int], *, feasible: bool = True
    ) -> "CutSolution":
        members = tuple(sorted(set(members)))
        if kind == "node":
            weights = [g.node_weights[v] for v in members]
            comps = g.components(removed_nodes=frozenset(members))
        elif kind == "edge":
            weights = [g.edge_weights[e] for e in members]
            comps = g.components(removed_edges=frozenset(members))
        else:
            raise ValueError(f"unknown cut kind {kind!r}")
        if any(w == INF for w in weights):
            raise NoFiniteCut("cut members must have finite weight")
        return cls(kind, members, sum(weights), comps, feasible)

    @classmethod
    def infeasible_for(cls, g: WeightedGraph, kind: str) -> "CutSolution":
        return cls(kind, (), INF, g.components(), False)


# -- max flow ----------------------------------------------------------


class _Dinic:
    """Integer max-flow (Dinic) over an arc list with residual pairs."""

    __slots__ = ("n", "to", "cap", "head")

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, cap_uv: int, cap_vu: int = 0) -> int:
        aid = len(self.to)
        self.head[u].append(aid)
        self.to.append(v)
        self.cap.append(cap_uv)
        self.head[v].append(aid + 1)
        self.to.append(u)
        self.cap.append(cap_vu)
        return aid

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for aid in head[v]:
                    w = to[aid]
                    if cap[aid] > 0 and level[w] < 0:
                        level[w] = level[v] + 1
                        queue.append(w)
            if level[t] < 0:
                return flow
            it = [0] * self.n
            # iterative blocking-flow DFS
            while True:
                path = []
                v = s
                while v != t:
                    advanced = False
                    while it[v] < len(head[v]):
                        aid = head[v][it[v]]
                        w = to[aid]
                        if cap[aid] > 0 and level[w] == level[v] + 1:
                            path.append(aid)
                            v = w
                            advanced = True
                            break
                        it[v] += 1
                    if not advanced:
                        if not path:
                            v = None
                            break
                        level[v] = -1  # dead end, never revisit this phase
                        aid = path.pop()
                        v = to[aid ^ 1]
                        it[v] += 1
                if v is None:
                    break
                pushed = min(cap[aid] for aid in path)
                for aid in path:
                    cap[aid] -= pushed
                    cap[aid ^ 1] += pushed
                flow += pushed


def _edge_cut_weight(
    g: WeightedGraph,
    sources: frozenset,
    sinks: frozenset,
    *,
    removed: frozenset = frozenset(),
    protected: frozenset = frozenset(),
) -> tuple[int, int]:
    """Minimum weight of an edge set separating sources from sinks.

    Returns ``(weight, big)`` where any weight >= big means no finite
    separator exists. INF edges and ``protected`` edges are uncuttable;
    ``removed`` edges are treated as already cut (at zero cost).
    """
    big = g.total_finite_weight() + 1
    hard = big * (len(g.edges) + 2)
    net = _Dinic(g.n + 2)
    s_node, t_node = g.n, g.n + 1
    for eid, (u, v) in enumerate(g.edges):
        if eid in removed:
            continue
        w = g.edge_weights[eid]
        c = big if (w == INF or eid in protected) else w
        if g.directed:
            net.add_edge(u, v, c, 0)
        else:
            net.add_edge(u, v, c, c)
    for s in sources:
        net.add_edge(s_node, s, hard, 0)
    for t in sinks:
        net.add_edge(t, t_node, hard, 0)
    return net.max_flow(s_node, t_node), big


def _node_cut_weight(
    g: WeightedGraph,
    sources: frozenset,
    sinks: frozenset,
    *,
    removed: frozenset = frozenset(),
    protected: frozenset = frozenset(),
) -> tuple[int, int]:
    """Minimum weight of a node set separating sources from sinks.

    Terminals and ``protected`` nodes are uncuttable; ``removed`` nodes
    are treated as already cut. Standard in/out node splitting.
    """
    big = g.total_finite_weight() + 1
    hard = big * (g.n + 2)
    net = _Dinic(2 * g.n + 2)
    terminals = sources | sinks
    for v in range(g.n):
        if v in removed:
            continue
        w = g.node_weights[v]
        c = big if (w == INF or v in terminals or v in protected) else w
        net.add_edge(2 * v, 2 * v + 1, c, 0)
    for u, v in g.edges:
        if u in removed or v in removed:
            continue
        net.add_edge(2 * u + 1, 2 * v, hard, 0)
        if not g.directed:
            net.add_edge(2 * v + 1, 2 * u, hard, 0)
    s_node, t_node = 2 * g.n, 2 * g.n + 1
    for s in sources:
        net.add_edge(s_node, 2 * s + 1, hard, 0)
    for t in sinks:
        net.add_edge(2 * t, t_node, hard, 0)
    return net.max_flow(s_node, t_node), big


def _check_terminals(g: WeightedGraph, sources, sinks) -> tuple[frozenset, frozenset]:
    sources, sinks = frozenset(sources), frozenset(sinks)
    if not sources or not sinks:
        raise ValueError("sources and sinks must be non-empty")
    for v in sources | sinks:
        if not (0 <= v < g.n):
            raise ValueError(f"terminal {v} outside 0..{g.n - 1}")
    if sources & sinks:
        raise ValueError(f"sources and sinks overlap: {sorted(sources & sinks)}")
    return sources, sinks


def max_flow_value(g: WeightedGraph, sources, sinks):
    """Max-flow value from sources to sinks with edge weights as capacities.

    Returns INF when the sides are joined by uncuttable edges only.
    """
    sources, sinks = _check_terminals(g, sources, sinks)
    flow, big = _edge_cut_weight(g, sources, sinks)
    return INF if flow >= big else flow


def _lex_min_members(candidates, weight_of, total, query):
    """Greedy lexicographic refinement of a minimum cut.

    ``query(removed, protected)`` must return the min-cut weight of the
    instance with ``removed`` already cut and ``protected`` uncuttable.
    Scanning ids in ascending order and keeping an id exactly when some
    minimum cut extends the current prefix with it yields the cut whose
    sorted member list is lexicographically smallest. No minimum cut is
    a subset of another (weights are >= 1), so prefix ties cannot occur.
    """
    members: list[int] = []
    excluded: set[int] = set()
    remaining = total
    for cid in candidates:
        if remaining == 0:
            break
        w = weight_of(cid)
        if w == INF:
            continue
        if w > remaining:
            excluded.add(cid)
            continue
        got = query(frozenset(members) | {cid}, frozenset(excluded))
        if got == remaining - w:
            members.append(cid)
            remaining -= w
        else:
            excluded.add(cid)
    if remaining != 0:
        raise AssertionError("lexicographic refinement failed to close the cut")
    return tuple(members)


def min_st_edge_cut(g: WeightedGraph, sources, sinks) -> CutSolution:
    """Minimum-weight edge set disconnecting every source from every sink.

    Directed graphs: no surviving directed path source -> sink. Among
    equal-weight minimum cuts the one with lexicographically smallest
    sorted edge-id list is returned, so results are deterministic.

    Raises NoFiniteCut when every separator needs an INF edge.
    """
    sources, sinks = _check_terminals(g, sources, sinks)
    base, big = _edge_cut_weight(g, sources, sinks)
    if base >= big:
        raise NoFiniteCut("every source-sink separator contains an INF edge")

    def query(removed, protected):
        got, _ = _edge_cut_weight(g, sources, sinks, removed=removed, protected=protected)
        return got

    members = _lex_min_members(
        range(len(g.edges)), lambda e: g.edge_weights[e], base, query
    )
    return CutSolution.from_members(g, "edge", members)


def min_st_node_cut(g: WeightedGraph, sources, sinks, *, protected=()) -> CutSolution:
    """Minimum-weight node set (terminals excluded) separating sources from sinks.

    ``protected`` adds further nodes that may not be cut. Tie-breaking
    and determinism match :func:`min_st_edge_cut`.

    Raises NoFiniteCut when no finite separator exists, in particular
    when a source is adjacent to a sink.
    """
    sources, sinks = _check_terminals(g, sources, sinks)
    protected = frozenset(protected)
    base, big = _node_cut_weight(g, sources, sinks, protected=protected)
    if base >= big:
        for s in sources:
            for w in g.neighbors(s):
                if w in sinks:
                    raise NoFiniteCut(f"source {s} is adjacent to sink {w}")
        raise NoFiniteCut("every source-sink separator contains an uncuttable node")

    terminals = sources | sinks

    def query(removed, prot):
        got, _ = _node_cut_weight(
            g, sources, sinks, removed=removed, protected=protected | prot
        )
        return got

    candidates = [v for v in range(g.n) if v not in terminals and v not in protected]
    members = _lex_min_members(candidates, lambda v: g.node_weights[v], base, query)
    return CutSolution.from_members(g, "node", members)


# -- component shrinking ----------------------------------------------


@dataclass(frozen=True)
class ShrinkResult:
    """Output of :func:`shrink_components`.

    ``node_map`` sends every original node to its image; ``edge_map``
    sends every new edge id to the original edge it stands for (relay
    half-edges both map to the edge they replaced).
    """

    graph: WeightedGraph
    node_map: Mapping[int, int]
    edge_map: Mapping[int, int]


def shrink_components(g: WeightedGraph, comps: Iterable[Iterable[int]]) -> ShrinkResult:
    """Collapse each node set into a single node, keeping the graph simple.

    Each set must induce a connected subgraph; sets must be pairwise
    disjoint. Intra-set edges are dropped and boundary edges re-attach to
    the new node. Where re-attachment would create a parallel edge, a
    relay node of weight INF is inserted and both half-edges carry the
    original edge's weight, so optimal cut values are preserved in both
    node and edge mode. Shrunk nodes get weight INF: they stand for
    groups whose interior must survive, never for cut candidates.
    """
    comp_list = [tuple(sorted(set(c))) for c in comps]
    seen: set[int] = set()
    for comp in comp_list:
        if not comp:
            raise ValueError("empty component set")
        if seen & set(comp):
            raise ValueError("component sets must be pairwise disjoint")
        seen |= set(comp)
        for v in comp:
            if not (0 <= v < g.n):
                raise ValueError(f"node {v} outside 0..{g.n - 1}")
        inside = g.reachable(
            [comp[0]],
            removed_nodes=frozenset(range(g.n)) - set(comp),
            directed=False,
        )
        if inside != set(comp):
            raise DisconnectedComponent(f"component {comp} does not induce a connected subgraph")

    node_map: dict[int, int] = {}
    new_node_weights: list = []
    for v in range(g.n):
        if v not in seen:
            node_map[v] = len(new_node_weights)
            new_node_weights.append(g.node_weights[v])
    for comp in comp_list:
        cid = len(new_node_weights)
        new_node_weights.append(INF)
        for v in comp:
            node_map[v] = cid

    new_edges: list[tuple[int, int]] = []
    new_weights: list = []
    edge_map: dict[int, int] = {}
    used: set = set()

    def claim(a: int, b: int) -> bool:
        key = (a, b) if g.directed else (min(a, b), max(a, b))
        if key in used:
            return False
        used.add(key)
        return True

    def append(a: int, b: int, w, orig: int):
        edge_map[len(new_edges)] = orig
        new_edges.append((a, b))
        new_weights.append(w)

    for eid, (u, v) in enumerate(g.edges):
        a, b = node_map[u], node_map[v]
        if a == b:
            continue
        w = g.edge_weights[eid]
        if claim(a, b):
            append(a, b, w, eid)
        else:
            rid = len(new_node_weights)
            new_node_weights.append(INF)
            append(a, rid, w, eid)
            append(rid, b, w, eid)

    shrunk = WeightedGraph.build(
        len(new_node_weights),
        new_edges,
        node_weights=new_node_weights,
        edge_weights=new_weights,
        directed=g.directed,
    )
    return ShrinkResult(shrunk, node_map, edge_map)
