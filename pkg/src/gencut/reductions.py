"""Instance transformers between cover, cut, bisection and interdiction problems.

Every reduction returns the constructed instance together with a
:class:`ReductionCertificate` carrying solution mappings in both
directions and the affine relation its objective values obey. Tests
never trust a construction without round-tripping it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cpmc import CpmcInstance
from .errors import OddOrder, SizeBoundExceeded
from .graph import INF, WeightedGraph, _Dinic
from .tmc import TmcInstance

SQUARE_LIMIT = 10_000


# -- problem instances ---------------------------------------------------


@dataclass(frozen=True)
class SetCoverInstance:
    """Weighted set cover over ground elements 0..n_elements-1."""

    n_elements: int
    sets: tuple[frozenset, ...]
    weights: tuple[int, ...]
    budget: int | None = None

    @classmethod
    def build(cls, n_elements, sets, weights=None, *, budget=None):
        sets = tuple(frozenset(s) for s in sets)
        weights = tuple(weights) if weights is not None else (1,) * len(sets)
        if len(weights) != len(sets):
            raise ValueError("one weight per set required")
        if any(not isinstance(w, int) or w < 1 for w in weights):
            raise ValueError("set weights must be positive integers")
        covered = set()
        for s in sets:
            for e in s:
                if not (0 <= e < n_elements):
                    raise ValueError(f"element {e} outside 0..{n_elements - 1}")
            covered |= s
        if covered != set(range(n_elements)):
            raise ValueError("every element must appear in at least one set")
        return cls(n_elements, sets, weights, budget=budget)

    @property
    def k(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class CoverInstance:
    """Min-cover / max-cover over a ground set of ``n_elements``.

    ``kind='min'``: choose ``m`` subsets minimizing distinct elements in
    their union. ``kind='max'``: choose ``n1`` elements maximizing the
    number of fully covered subsets. Duplicate subsets are kept: the
    squaring operation relies on multiplicity.
    """

    kind: str
    n_elements: int
    collection: tuple[frozenset, ...]
    m: int | None = None
    n1: int | None = None

    @classmethod
    def build(cls, kind, n_elements, collection, *, m=None, n1=None):
        if kind not in ("min", "max"):
            raise ValueError("kind must be 'min' or 'max'")
        collection = tuple(frozenset(s) for s in collection)
        if not collection:
            raise ValueError("collection must be non-empty")
        for s in collection:
            if not s:
                raise ValueError("empty subsets are not allowed")
            for e in s:
                if not (0 <= e < n_elements):
                    raise ValueError(f"element {e} outside 0..{n_elements - 1}")
        if kind == "min":
            if m is None or not (1 <= m <= len(collection)):
                raise ValueError("min-cover needs 1 <= m <= |collection|")
        else:
            if n1 is None or not (0 <= n1 <= n_elements):
                raise ValueError("max-cover needs 0 <= n1 <= n_elements")
        return cls(kind, n_elements, collection, m=m, n1=n1)

    @property
    def tau(self) -> int:
        return max(len(s) for s in self.collection)

    @classmethod
    def from_graph_min_nodes_for_edges(cls, g: WeightedGraph, m: int) -> "CoverInstance":
        """Subgraph with >= m edges on fewest nodes, as a min-cover instance."""
        return cls.build("min", g.n, [frozenset(e) for e in g.edges], m=m)

    @classmethod
    def from_graph_max_edges_on_nodes(cls, g: WeightedGraph, n1: int) -> "CoverInstance":
        """Densest n1-node subgraph, as a max-cover instance (tau = 2)."""
        return cls.build("max", g.n, [frozenset(e) for e in g.edges], n1=n1)


@dataclass(frozen=True)
class InterdictionInstance:
    """Arc-blocking flow instance: capacities and blocking costs per arc.

    Sink-incoming arcs carry capacity 1, element arcs carry blocking
    cost 1, and everything else is uncuttable/unbounded (INF), matching
    the construction this type exists to host.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]
    capacity: tuple
    block_cost: tuple
    source: int
    sink: int
    budget: int | None = None

    @classmethod
    def build(cls, n, arcs, capacity, block_cost, source, sink, *, budget=None):
        arcs = tuple((u, v) for u, v in arcs)
        capacity = tuple(capacity)
        block_cost = tuple(block_cost)
        if len(capacity) != len(arcs) or len(block_cost) != len(arcs):
            raise ValueError("capacity and block_cost must match the arc list")
        for (u, v) in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("arc endpoint out of range")
        for c in (*capacity, *block_cost):
            if c != INF and (not isinstance(c, int) or c < 1):
                raise ValueError("capacities and costs are positive integers or INF")
        for (u, v), c in zip(arcs, capacity):
            if v == sink and c != 1:
                raise ValueError("sink-incoming arcs must have capacity 1")
        return cls(n, arcs, capacity, block_cost, source, sink, budget=budget)


def interdiction_max_flow(inst: InterdictionInstance, blocked: Iterable[int] = ()) -> int:
    """Max flow after removing the blocked arcs (ids into the arc list)."""
    blocked = set(blocked)
    cap_sum = sum(c for c in inst.capacity if c != INF) + 1
    net = _Dinic(inst.n)
    for aid, (u, v) in enumerate(inst.arcs):
        if aid in blocked:
            continue
        c = inst.capacity[aid]
        net.add_edge(u, v, cap_sum if c == INF else c)
    return net.max_flow(inst.source, inst.sink)


# -- oracle solvers ------------------------------------------------------


def solve_setcover_exact(sc: SetCoverInstance) -> tuple[int, tuple[int, ...]]:
    """Optimal cover by enumeration: (weight, chosen set indices)."""
    universe = frozenset(range(sc.n_elements))
    best: tuple | None = None
    for r in range(sc.k + 1):
        for combo in itertools.combinations(range(sc.k), r):
            cov = frozenset().union(*(sc.sets[i] for i in combo)) if combo else frozenset()
            if cov == universe:
                w = sum(sc.weights[i] for i in combo)
                if best is None or (w, combo) < best:
                    best = (w, combo)
    assert best is not None  # construction guarantees the full cover works
    return best


def covered_count(c: CoverInstance, chosen_elements: Iterable[int]) -> int:
    """How many collection members are fully inside the chosen elements."""
    chosen = frozenset(chosen_elements)
    return sum(1 for s in c.collection if s <= chosen)


def solve_max_cover_exact(c: CoverInstance) -> tuple[int, tuple[int, ...]]:
    """Best (count, element subset) over all n1-element choices."""
    if c.kind != "max":
        raise ValueError("max-cover instance required")
    best = (-1, ())
    for combo in itertools.combinations(range(c.n_elements), c.n1):
        cnt = covered_count(c, combo)
        if cnt > best[0]:
            best = (cnt, combo)
    return best


def solve_min_cover_exact(c: CoverInstance) -> tuple[int, tuple[int, ...]]:
    """Smallest (union size, subset indices) over all m-subset choices."""
    if c.kind != "min":
        raise ValueError("min-cover instance required")
    best: tuple | None = None
    for combo in itertools.combinations(range(len(c.collection)), c.m):
        union = frozenset().union(*(c.collection[i] for i in combo))
        if best is None or (len(union), combo) < best:
            best = (len(union), combo)
    return best


def square_collection(c: CoverInstance, *, limit: int = SQUARE_LIMIT) -> CoverInstance:
    """All ordered pairwise unions, duplicates kept: |C^2| = |C|^2.

    Fully-covered counts square pointwise under this operation, so any
    approximation guarantee square-roots when pulled back.
    """
    if c.kind != "max":
        raise ValueError("squaring applies to max-cover instances")
    size = len(c.collection) ** 2
    if size > limit:
        raise SizeBoundExceeded(f"|C|^2 = {size} exceeds the {limit} bound")
    squared = tuple(a | b for a in c.collection for b in c.collection)
    return CoverInstance.build("max", c.n_elements, squared, n1=c.n1)


# -- certificates --------------------------------------------------------


@dataclass(frozen=True)
class ValueRelation:
    """target = scale * source + g with offset_lo <= g <= offset_hi.

    ``sense='affine'`` checks the band as stated; ``sense='flow-drop'``
    reads source as a covered count and target as a post-blocking max
    flow with ``scale`` holding the baseline flow.
    """

    scale: int
    offset_lo: int
    offset_hi: int
    sense: str = "affine"

    def check(self, source_value, target_value, *, band: bool = True) -> str | None:
        """Audit a value pair.

        ``band=True`` demands the full window (canonical forward images
        satisfy it); ``band=False`` checks only the sound lower bound,
        which is all an arbitrary feasible target solution promises.
        """
        if self.sense == "flow-drop":
            want = self.scale - source_value
            if target_value != want:
                return f"flow {target_value} != baseline {self.scale} - covered {source_value}"
            return None
        lo = self.scale * source_value + self.offset_lo
        hi = self.scale * source_value + self.offset_hi
        if target_value < lo:
            return f"target value {target_value} below the sound bound {lo}"
        if band and target_value > hi:
            return f"target value {target_value} outside [{lo}, {hi}]"
        return None

    def source_from_target(self, target_value) -> int:
        """Invert the affine band (the recovered source objective)."""
        if self.sense != "affine":
            raise ValueError("only affine relations invert")
        return (target_value - self.offset_lo) // self.scale if self.scale else target_value


@dataclass(frozen=True)
class CertificateVerdict:
    ok: bool
    violations: tuple[str, ...]


@dataclass(frozen=True)
class ReductionCertificate:
    """Bidirectional solution mappings plus feasibility and value audits.

    Solutions are plain dicts (documented per reduction). ``forward``
    maps a source solution to a target solution; ``backward`` inverts.
    """

    name: str
    source_instance: object
    target_instance: object
    forward: Callable[[dict], dict] = field(compare=False)
    backward: Callable[[dict], dict] = field(compare=False)
    value_relation: ValueRelation = field(default=None)
    source_feasible: Callable[[dict], str | None] = field(compare=False, default=None)
    target_feasible: Callable[[dict], str | None] = field(compare=False, default=None)


def verify_certificate(cert: ReductionCertificate, source_solution: dict, target_solution: dict) -> CertificateVerdict:
    """Audit a solution pair against the certificate.

    Checks feasibility of both solutions, that the mapped images remain
    feasible, and that the objective values satisfy the certificate's
    relation (as an inequality band, so suboptimal-but-feasible pairs
    pass when they should).
    """
    violations = []
    msg = cert.source_feasible(source_solution)
    if msg:
        violations.append(f"source solution: {msg}")
    msg = cert.target_feasible(target_solution)
    if msg:
        violations.append(f"target solution: {msg}")
    if not violations:
        fwd = cert.forward(source_solution)
        msg = cert.target_feasible(fwd)
        if msg:
            violations.append(f"forward image: {msg}")
        bwd = cert.backward(target_solution)
        msg = cert.source_feasible(bwd)
        if msg:
            violations.append(f"backward image: {msg}")
        msg = cert.value_relation.check(source_solution["value"], fwd["value"])
        if msg:
            violations.append(f"forward value: {msg}")
        msg = cert.value_relation.check(bwd["value"], target_solution["value"], band=False)
        if msg:
            violations.append(f"backward value: {msg}")
    return CertificateVerdict(not violations, tuple(violations))


# -- set cover -> one-way preserving edge cut ----------------------------


def reduce_setcover_to_directed_cpmec(sc: SetCoverInstance):
    """Element-gadget chain with one weighted arc per set.

    Per element: two end caps with one internal node per containing set,
    wired cap -> internal -> cap by unit arcs. Gadgets chain left to
    right between the preserved pair, so the surviving path must thread
    every gadget. The destination reaches each gadget only through its
    set's weighted arc; cutting that arc (for cover sets) or the unit
    exits (for the rest) is the only way to seal it, which prices cuts
    at scale * cover weight plus a sub-scale remainder.

    Solution dicts: source ``{"sets": [...], "value": w}``; target
    ``{"members": [edge ids], "value": w}``.
    """
    n1, k = sc.n_elements, sc.k
    scale = n1 * k
    # node layout: s1, s2, t, caps L_e/R_e, internals v[(e, i)], arc ends a_i, b_i
    s1, s2, t = 0, 1, 2
    nid = 3
    left, right = {}, {}
    for e in range(n1):
        left[e] = nid
        right[e] = nid + 1
        nid += 2
    internal = {}
    for e in range(n1):
        for i in range(k):
            if e in sc.sets[i]:
                internal[(e, i)] = nid
                nid += 1
    arc_start, arc_end = {}, {}
    for i in range(k):
        arc_start[i] = nid
        arc_end[i] = nid + 1
        nid += 2

    arcs, weights = [], []

    def add(u, v, w):
        arcs.append((u, v))
        weights.append(w)
        return len(arcs) - 1

    add(s1, left[0], INF)
    for e in range(n1 - 1):
        add(right[e], left[e + 1], INF)
    add(right[n1 - 1], s2, INF)
    enter_arc, exit_arc = {}, {}
    for (e, i), v in internal.items():
        enter_arc[(e, i)] = add(left[e], v, 1)
        exit_arc[(e, i)] = add(v, right[e], 1)
    set_arc = {}
    for i in range(k):
        add(t, arc_start[i], INF)
        set_arc[i] = add(arc_start[i], arc_end[i], sc.weights[i] * scale)
        for e in sorted(sc.sets[i]):
            add(arc_end[i], internal[(e, i)], INF)

    g = WeightedGraph.build(nid, arcs, edge_weights=weights, directed=True)
    budget = scale * sc.budget + scale - 1 if sc.budget is not None else None
    inst = CpmcInstance.build(
        g,
        s1,
        [s2],
        [t],
        "edge",
        budget=budget,
        provenance={"reduction": "setcover-to-directed-cpmec", "scale": scale},
    )

    def forward(sol):
        chosen = set(sol["sets"])
        members = [set_arc[i] for i in sorted(chosen)]
        for i in range(k):
            if i not in chosen:
                members.extend(exit_arc[(e, i)] for e in sorted(sc.sets[i]))
        return {"members": sorted(members), "value": sum(weights[m] for m in members)}

    def backward(sol):
        chosen = sorted(i for i in range(k) if set_arc[i] in set(sol["members"]))
        return {"sets": chosen, "value": sum(sc.weights[i] for i in chosen)}

    def source_feasible(sol):
        cov = set()
        for i in sol["sets"]:
            cov |= sc.sets[i]
        if cov != set(range(n1)):
            return f"sets {sorted(sol['sets'])} do not cover every element"
        if sol["value"] != sum(sc.weights[i] for i in sol["sets"]):
            return "stated value does not match the chosen sets"
        return None

    def target_feasible(sol):
        members = frozenset(sol["members"])
        if any(weights[m] == INF for m in members):
            return "cut uses an uncuttable arc"
        hit = g.reachable([t], removed_edges=members)
        if s1 in hit or s2 in hit:
            return "destination still reaches the preserved pair"
        comp = g.reachable([s1], removed_edges=members)
        if s2 not in comp and s1 not in g.reachable([s2], removed_edges=members):
            return "preserved pair disconnected"
        if sol["value"] != sum(weights[m] for m in members):
            return "stated value does not match the members"
        return None

    cert = ReductionCertificate(
        "setcover-to-directed-cpmec",
        sc,
        inst,
        forward,
        backward,
        # remainder counts unit exit arcs of non-cover sets: at most
        # sum(|S_i|) - n1 <= n1*k - n1 of them
        ValueRelation(scale, 0, scale - n1),
        source_feasible,
        target_feasible,
    )
    return inst, cert


# -- set cover -> multi-partner preserving edge cut ----------------------


def reduce_setcover_to_multipartner_cpmec(sc: SetCoverInstance):
    """Undirected variant: set arcs become set edges, caps become partners.

    Each element contributes two consecutive gadgets whose shared middle
    cap is reachable only through that element's internal nodes. Every
    set hangs off the destination behind one weighted set edge; its hub
    fans out to its internal nodes with uncuttable edges, and internals
    strap to their gadget caps with unit edges. Sealing an internal off
    the destination takes either the set edge or both straps; bridging a
    gadget needs intact straps, which forces the set edge cut. A hub
    whose set edge fell can splice distant caps together, but it can
    never reach the private middle cap of an uncovered element, so
    feasibility still demands a genuine cover. The doubling is also why
    the set-edge scale is 4*n1*k: it must dominate the doubled straps
    so optimal cuts always choose an optimal cover.
    """
    n1, k = sc.n_elements, sc.k
    scale = 4 * n1 * k
    slots = [(e, c) for e in range(n1) for c in range(2)]  # doubled chain
    caps = list(range(2 * n1 + 1))  # E_0 .. E_2n1; E_0 is the source
    t = 2 * n1 + 1
    nid = 2 * n1 + 2
    hub = {}
    for i in range(k):
        hub[i] = nid
        nid += 1
    internal = {}
    for pos, (e, c) in enumerate(slots):
        for i in range(k):
            if e in sc.sets[i]:
                internal[(pos, i)] = nid
                nid += 1

    edges, weights = [], []

    def add(u, v, w):
        edges.append((u, v))
        weights.append(w)
        return len(edges) - 1

    set_edge = {}
    for i in range(k):
        set_edge[i] = add(t, hub[i], sc.weights[i] * scale)
        for pos, (e, c) in enumerate(slots):
            if e in sc.sets[i]:
                add(hub[i], internal[(pos, i)], INF)
    strap = {}
    for (pos, i), v in internal.items():
        strap[(pos, i)] = (add(caps[pos], v, 1), add(v, caps[pos + 1], 1))

    g = WeightedGraph.build(nid, edges, edge_weights=weights)
    budget = scale * sc.budget + scale - 1 if sc.budget is not None else None
    inst = CpmcInstance.build(
        g,
        caps[0],
        caps[1:],
        [t],
        "edge",
        budget=budget,
        provenance={"reduction": "setcover-to-multipartner-cpmec", "scale": scale},
    )

    def forward(sol):
        chosen = set(sol["sets"])
        members = [set_edge[i] for i in sorted(chosen)]
        for (pos, i) in sorted(internal):
            if i not in chosen:
                members.extend(strap[(pos, i)])
        return {"members": sorted(members), "value": sum(weights[m] for m in members)}

    def backward(sol):
        chosen = sorted(i for i in range(k) if set_edge[i] in set(sol["members"]))
        return {"sets": chosen, "value": sum(sc.weights[i] for i in chosen)}

    def source_feasible(sol):
        cov = set()
        for i in sol["sets"]:
            cov |= sc.sets[i]
        if cov != set(range(n1)):
            return f"sets {sorted(sol['sets'])} do not cover every element"
        if sol["value"] != sum(sc.weights[i] for i in sol["sets"]):
            return "stated value does not match the chosen sets"
        return None

    def target_feasible(sol):
        members = frozenset(sol["members"])
        if any(weights[m] == INF for m in members):
            return "cut uses an uncuttable edge"
        comp = g.reachable([caps[0]], removed_edges=members)
        if any(c not in comp for c in caps):
            return "partner caps disconnected"
        if t in comp:
            return "destination still connected to the partners"
        if sol["value"] != sum(weights[m] for m in members):
            return "stated value does not match the members"
        return None

    cert = ReductionCertificate(
        "setcover-to-multipartner-cpmec",
        sc,
        inst,
        forward,
        backward,
        # four unit straps per (element, uncovered set) pair: remainder
        # stays below the scale, so cover weights recover cleanly
        ValueRelation(scale, 0, 4 * (n1 * k - n1)),
        source_feasible,
        target_feasible,
    )
    return inst, cert


# -- bisection -> threshold edge cut -------------------------------------


def reduce_bisection_to_tmec(g: WeightedGraph):
    """Join a fresh client to every node at quadratic cost; l = n/2.

    A threshold cut must strand exactly half the nodes (more would buy
    extra quadratic edges), so optimal values shift by n^3/2 exactly.

    Solution dicts: source ``{"side": [...], "value": u}`` (the side not
    containing node 0); target ``{"members": [...], "value": u + n^3/2}``.
    """
    if g.directed:
        raise ValueError("bisection reduction needs an undirected graph")
    if any(w != 1 for w in g.edge_weights):
        raise ValueError("bisection reduction is defined for unit edge costs")
    n = g.n
    if n % 2:
        raise OddOrder(f"node count {n} must be even")
    client = n
    edges = list(g.edges)
    weights = [1] * len(g.edges)
    client_edge = {}
    for v in range(n):
        client_edge[v] = len(edges)
        edges.append((v, client))
        weights.append(n * n)
    gg = WeightedGraph.build(n + 1, edges, edge_weights=weights)
    inst = TmcInstance.build(gg, list(range(n)), client, n // 2, "edge")
    shift = n**3 // 2

    def forward(sol):
        side = set(sol["side"])
        members = [
            eid for eid, (u, v) in enumerate(g.edges) if (u in side) != (v in side)
        ]
        members += [client_edge[v] for v in sorted(side)]
        return {"members": sorted(members), "value": sum(weights[m] for m in members)}

    def backward(sol):
        members = set(sol["members"])
        hit = gg.reachable([client], removed_edges=frozenset(members))
        side = {v for v in range(n) if v not in hit}
        if 0 in side:  # canonical: report the half without node 0
            side = set(range(n)) - side
        crossing = sum(1 for (u, v) in g.edges if (u in side) != (v in side))
        return {"side": sorted(side), "value": crossing}

    def source_feasible(sol):
        side = set(sol["side"])
        if len(side) != n // 2 or 0 in side:
            return "side must be the half not containing node 0"
        crossing = sum(1 for (u, v) in g.edges if (u in side) != (v in side))
        if sol["value"] != crossing:
            return "stated value does not match the crossing count"
        return None

    def target_feasible(sol):
        members = frozenset(sol["members"])
        hit = gg.reachable([client], removed_edges=members)
        cut_off = sum(1 for v in range(n) if v not in hit)
        if cut_off < n // 2:
            return f"only {cut_off} services stranded, need {n // 2}"
        if sol["value"] != sum(weights[m] for m in members):
            return "stated value does not match the members"
        return None

    cert = ReductionCertificate(
        "bisection-to-tmec",
        g,
        inst,
        forward,
        backward,
        ValueRelation(1, shift, shift),
        source_feasible,
        target_feasible,
    )
    return inst, cert


# -- max cover -> interdiction -------------------------------------------


def reduce_maxcover_to_interdiction(c: CoverInstance):
    """Element arcs feed subset nodes; unit arcs drain into the sink.

    Baseline max flow equals |C|. Blocking the arcs of an element set
    kills exactly the subset nodes it fully covers, so the flow drops by
    the covered count: maximizing coverage minimizes residual flow.

    Solution dicts: source ``{"elements": [...], "value": covered}``;
    target ``{"blocked": [arc ids], "value": resulting max flow}``.
    """
    if c.kind != "max":
        raise ValueError("max-cover instance required")
    src, snk = 0, 1
    nid = 2
    subset_node = {}
    for j in range(len(c.collection)):
        subset_node[j] = nid
        nid += 1
    elem_in, elem_out = {}, {}
    for e in range(c.n_elements):
        elem_in[e] = nid
        elem_out[e] = nid + 1
        nid += 2

    arcs, caps, costs = [], [], []

    def add(u, v, cap, cost):
        arcs.append((u, v))
        caps.append(cap)
        costs.append(cost)
        return len(arcs) - 1

    element_arc = {}
    for e in range(c.n_elements):
        add(src, elem_in[e], INF, INF)
        element_arc[e] = add(elem_in[e], elem_out[e], INF, 1)
        for j, s in enumerate(c.collection):
            if e in s:
                add(elem_out[e], subset_node[j], INF, INF)
    for j in range(len(c.collection)):
        add(subset_node[j], snk, 1, INF)

    inst = InterdictionInstance.build(nid, arcs, caps, costs, src, snk, budget=c.n1)
    baseline = len(c.collection)

    def forward(sol):
        blocked = sorted(element_arc[e] for e in sol["elements"])
        return {"blocked": blocked, "value": interdiction_max_flow(inst, blocked)}

    def backward(sol):
        rev = {aid: e for e, aid in element_arc.items()}
        elements = sorted(rev[a] for a in sol["blocked"])
        return {"elements": elements, "value": covered_count(c, elements)}

    def source_feasible(sol):
        elements = set(sol["elements"])
        if len(elements) > c.n1:
            return f"{len(elements)} elements exceed the budget {c.n1}"
        if sol["value"] != covered_count(c, elements):
            return "stated value does not match the covered count"
        return None

    def target_feasible(sol):
        blocked = set(sol["blocked"])
        if any(inst.block_cost[a] == INF for a in blocked):
            return "blocked an unblockable arc"
        if len(blocked) > c.n1:
            return f"{len(blocked)} blocks exceed the budget {c.n1}"
        if sol["value"] != interdiction_max_flow(inst, blocked):
            return "stated value does not match the residual flow"
        return None

    cert = ReductionCertificate(
        "maxcover-to-interdiction",
        c,
        inst,
        forward,
        backward,
        ValueRelation(baseline, 0, 0, sense="flow-drop"),
        source_feasible,
        target_feasible,
    )
    return inst, cert
