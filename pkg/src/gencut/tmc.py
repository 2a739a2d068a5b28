"""Threshold cuts: disconnect a client from at least l of k service nodes.

``solve_tmc_exact`` is the enumerative oracle (min over service
l-subsets of a plain minimum cut). ``solve_tmnc_lp`` is the node-mode
approximation: an LP relaxation whose per-node values steer which l
services to cut off, with a sorted-prefix shortcut when l is small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import InstanceTooLarge, LpInfeasible, NoFiniteCut
from .graph import (
    INF,
    CutSolution,
    WeightedGraph,
    _edge_cut_weight,
    _lex_min_members,
    _node_cut_weight,
    min_st_edge_cut,
    min_st_node_cut,
)
from .lp import LpModel, solve_lp

#: Cap on the number of service subsets the exact oracle will scan.
SUBSET_LIMIT = 10**6


@dataclass(frozen=True)
class TmcInstance:
    """Threshold cut instance: client, k services, threshold l.

    In node mode neither the client nor any service is a cut candidate;
    a cut is judged by how many services lose their connection to the
    client after removal.
    """

    graph: WeightedGraph
    services: tuple[int, ...]
    client: int
    threshold: int
    mode: str  # "node" | "edge"
    budget: int | None = None

    @classmethod
    def build(cls, graph, services: Iterable[int], client: int, threshold: int, mode: str, *, budget=None):
        services = tuple(services)
        if mode not in ("node", "edge"):
            raise ValueError(f"mode must be 'node' or 'edge', got {mode!r}")
        if len(set(services)) != len(services) or not services:
            raise ValueError("services must be distinct and non-empty")
        if client in services:
            raise ValueError("client must not be a service node")
        for v in (client, *services):
            if not (0 <= v < graph.n):
                raise ValueError(f"terminal {v} outside 0..{graph.n - 1}")
        if not (1 <= threshold <= len(services)):
            raise ValueError(f"threshold must lie in 1..{len(services)}")
        if graph.directed:
            raise ValueError("threshold cuts are defined on undirected graphs")
        return cls(graph, services, client, threshold, mode, budget=budget)

    @property
    def k(self) -> int:
        return len(self.services)


def _disconnected_services(inst: TmcInstance, members) -> int:
    g = inst.graph
    removed_n = frozenset(members) if inst.mode == "node" else frozenset()
    removed_e = frozenset(members) if inst.mode == "edge" else frozenset()
    hit = g.reachable([inst.client], removed_nodes=removed_n, removed_edges=removed_e)
    return sum(1 for s in inst.services if s not in hit)


def solve_tmc_exact(inst: TmcInstance, *, limit: int = SUBSET_LIMIT) -> CutSolution:
    """Exact optimum: min over service l-subsets of the plain minimum cut.

    Sound because any feasible cut separates some l-subset, so it costs
    at least the best l-subset cut; and every l-subset cut is feasible.
    """
    g = inst.graph
    l, k = inst.threshold, inst.k
    if math.comb(k, l) > limit:
        raise InstanceTooLarge(f"C({k},{l}) exceeds the {limit} subset bound")
    weight_fn = _node_cut_weight if inst.mode == "node" else _edge_cut_weight
    protected = frozenset(inst.services) if inst.mode == "node" else frozenset()
    sink = frozenset([inst.client])
    best: tuple | None = None
    for subset in combinations(inst.services, l):
        kwargs = {"protected": protected} if inst.mode == "node" else {}
        w, big = weight_fn(g, frozenset(subset), sink, **kwargs)
        if w >= big:
            continue
        if best is None or w < best[0]:
            best = (w, subset)
    if best is None:
        raise NoFiniteCut("no l-subset of services admits a finite cut")
    w, subset = best
    if inst.mode == "node":
        sol = min_st_node_cut(g, subset, [inst.client], protected=protected)
    else:
        sol = min_st_edge_cut(g, subset, [inst.client])
    assert sol.weight == w
    return sol


def build_tmnc_lp(inst: TmcInstance) -> LpModel:
    """Fractional relaxation of the node-mode threshold cut.

    One cut variable X_v per finite-weight non-terminal node, one
    disconnection variable Y_v per node. Each edge (i, j) yields
    Y_i <= X_i + Y_j and Y_j <= X_j + Y_i; the client is pinned to
    Y = 0 and the services must accumulate at least l units of
    disconnection. Objective: minimize the weighted cut mass.
    """
    if inst.mode != "node":
        raise ValueError("the LP relaxation is defined for node mode")
    g = inst.graph
    terminals = {inst.client, *inst.services}
    cut_vars = [v for v in range(g.n) if v not in terminals and g.node_weights[v] != INF]
    x_index = {v: i for i, v in enumerate(cut_vars)}
    ny = g.n
    nx = len(cut_vars)

    def xcol(v):  # X column or None for pinned-to-zero terminals/INF nodes
        return x_index.get(v)

    names = [f"X_{v}" for v in cut_vars] + [f"Y_{v}" for v in range(ny)]
    nvar = nx + ny
    c = [0.0] * nvar
    for v, i in x_index.items():
        c[i] = float(g.node_weights[v])
    a_ub, b_ub = [], []
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            row = [0.0] * nvar
            row[nx + a] = 1.0  # Y_a
            row[nx + b] -= 1.0  # - Y_b
            if xcol(a) is not None:
                row[xcol(a)] = -1.0
            a_ub.append(row)
            b_ub.append(0.0)
    # sum of service Y values >= l
    row = [0.0] * nvar
    for s in inst.services:
        row[nx + s] = -1.0
    a_ub.append(row)
    b_ub.append(-float(inst.threshold))
    bounds = [(0.0, 1.0)] * nvar
    bounds[nx + inst.client] = (0.0, 0.0)
    return LpModel.build(c, a_ub=a_ub, b_ub=b_ub, bounds=bounds, names=names)


def _service_cut_value(inst: TmcInstance, s: int):
    """Individual min node-cut value between one service and the client."""
    protected = frozenset(inst.services)
    w, big = _node_cut_weight(inst.graph, frozenset([s]), frozenset([inst.client]), protected=protected)
    return INF if w >= big else w


def solve_tmnc_lp(inst: TmcInstance) -> CutSolution:
    """Node-mode approximation: LP relaxation plus threshold rounding.

    For small thresholds (l below sqrt(n)) the l individually cheapest
    services are cut directly. Otherwise the LP's Y values pick the
    services that are already fractionally disconnected; when fewer than
    l clear the 1/sqrt(n) bar, the shortfall is filled with the
    cheapest remaining services by individual cut value. The output is
    always feasibility-audited.
    """
    if inst.mode != "node":
        raise ValueError("lp rounding applies to node mode")
    g = inst.graph
    n, l, k = g.n, inst.threshold, inst.k
    root_n = math.sqrt(n)
    protected = frozenset(inst.services)

    def joint_cut(chosen) -> CutSolution:
        sol = min_st_node_cut(g, chosen, [inst.client], protected=protected)
        if _disconnected_services(inst, sol.members) < l:
            raise AssertionError("rounding produced an infeasible cut")
        return sol

    if l < root_n:
        order = sorted(inst.services, key=lambda s: (_service_cut_value(inst, s), s))
        chosen = order[:l]
        if any(_service_cut_value(inst, s) == INF for s in chosen):
            raise NoFiniteCut("fewer than l services admit finite individual cuts")
        return joint_cut(chosen)

    lp_sol = solve_lp(build_tmnc_lp(inst))
    if lp_sol.status != "optimal":
        raise LpInfeasible(f"relaxation came back {lp_sol.status}")
    y = {s: lp_sol[f"Y_{s}"] for s in inst.services}
    ranked = sorted(inst.services, key=lambda s: (-y[s], s))
    first_low = next((i for i, s in enumerate(ranked) if y[s] < 1.0 / root_n), k)
    # positions are 1-based in the threshold comparison
    if first_low + 1 > l:
        return joint_cut(ranked[:l])
    head = ranked[:first_low]
    tail = sorted(ranked[first_low:], key=lambda s: (_service_cut_value(inst, s), s))
    chosen = head + tail[: l - len(head)]
    if any(_service_cut_value(inst, s) == INF for s in chosen):
        raise NoFiniteCut("fewer than l services admit finite individual cuts")
    return joint_cut(chosen)


def tmnc_lp_lower_bound(inst: TmcInstance) -> float:
    """Objective value of the relaxation; a lower bound on the optimum."""
    sol = solve_lp(build_tmnc_lp(inst))
    if sol.status != "optimal":
        raise LpInfeasible(f"relaxation came back {sol.status}")
    return sol.objective


def meets_budget(inst: TmcInstance, solution: CutSolution | None = None) -> bool:
    """Decision form: does the optimum fit the instance budget?"""
    if inst.budget is None:
        raise ValueError("instance has no budget")
    sol = solution if solution is not None else solve_tmc_exact(inst)
    return sol.feasible and sol.weight <= inst.budget
