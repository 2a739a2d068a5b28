"""Reproducible random instance generators for every document kind."""

from __future__ import annotations

import random

from .cpmc import CpmcInstance
from .errors import InvalidParams
from .graph import WeightedGraph, _edge_cut_weight, _node_cut_weight
from .io import InstanceDocument
from .reductions import CoverInstance, SetCoverInstance, reduce_maxcover_to_interdiction
from .tmc import TmcInstance

_KINDS = ("graph", "planar", "cpmc", "tmc", "setcover", "cover", "interdiction")


def _random_connected_graph(rng, n, extra, wmin, wmax, directed=False):
    edges = []
    seen = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v))
        seen.add((min(u, v), max(u, v)))
    attempts = 0
    while len(edges) < n - 1 + extra and attempts < 20 * n:
        attempts += 1
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or (min(u, v), max(u, v)) in seen:
            continue
        seen.add((min(u, v), max(u, v)))
        edges.append((u, v))
    if directed:
        edges = [(v, u) if rng.random() < 0.5 else (u, v) for u, v in edges]
    return WeightedGraph.build(
        n,
        edges,
        node_weights=[rng.randint(wmin, wmax) for _ in range(n)],
        edge_weights=[rng.randint(wmin, wmax) for _ in edges],
        directed=directed,
    )


def _random_planar_graph(rng, rows, cols, wmin, wmax, drop):
    """Grid minus random edges, kept connected (planar by construction,
    re-verified by the embedding builder in tests)."""
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = cols * r + c
            if c < cols - 1:
                edges.append((v, v + 1))
            if r < rows - 1:
                edges.append((v, v + cols))
    base = WeightedGraph.build(rows * cols, edges)
    removed: set[int] = set()
    order = list(range(len(edges)))
    rng.shuffle(order)
    for eid in order:
        if rng.random() < drop:
            trial = removed | {eid}
            if len(base.reachable([0], removed_edges=frozenset(trial), directed=False)) == base.n:
                removed = trial
    keep = [e for e in range(len(edges)) if e not in removed]
    return WeightedGraph.build(
        rows * cols,
        [edges[e] for e in keep],
        node_weights=[rng.randint(wmin, wmax) for _ in range(rows * cols)],
        edge_weights=[rng.randint(wmin, wmax) for _ in keep],
    )


def generate_random(kind: str, params: dict | None = None, seed: int = 0) -> InstanceDocument:
    """Deterministic random instance of the given kind.

    Common params: ``n`` (nodes), ``extra`` (edges beyond a spanning
    tree), ``wmin``/``wmax`` (weight range). Planar: ``rows``/``cols``/
    ``drop``. TMC: ``k``, ``l``, ``mode``; the generator retries until
    at least ``l`` services admit finite cuts, so instances are always
    solvable. Cover: ``kind_cover`` ('min'|'max'), ``m``/``n1``.
    """
    if kind not in _KINDS:
        raise InvalidParams(f"unknown kind {kind!r}; expected one of {_KINDS}")
    p = dict(params or {})
    rng = random.Random(seed)
    wmin, wmax = p.get("wmin", 1), p.get("wmax", 6)
    if not (1 <= wmin <= wmax):
        raise InvalidParams("need 1 <= wmin <= wmax")

    if kind == "graph":
        n = p.get("n", 10)
        if n < 2:
            raise InvalidParams("graph generation needs n >= 2")
        g = _random_connected_graph(
            rng, n, p.get("extra", n // 2), wmin, wmax, p.get("directed", False)
        )
        return InstanceDocument("graph", g, rng_seed=seed)

    if kind == "planar":
        rows, cols = p.get("rows", 3), p.get("cols", 3)
        if rows < 1 or cols < 1 or rows * cols < 2:
            raise InvalidParams("planar generation needs a non-trivial grid")
        g = _random_planar_graph(rng, rows, cols, wmin, wmax, p.get("drop", 0.3))
        return InstanceDocument(
            "graph", g, provenance=(("generator", "planar"),), rng_seed=seed
        )

    if kind == "cpmc":
        n = p.get("n", 10)
        if n < 4:
            raise InvalidParams("cpmc generation needs n >= 4")
        mode = p.get("mode", "edge")
        n_partners = p.get("partners", 1)
        g = _random_connected_graph(rng, n, p.get("extra", n // 2), wmin, wmax)
        terms = rng.sample(range(n), 2 + n_partners)
        inst = CpmcInstance.build(g, terms[0], terms[1 : 1 + n_partners], [terms[-1]], mode)
        return InstanceDocument("cpmc", inst, rng_seed=seed)

    if kind == "tmc":
        n, k = p.get("n", 12), p.get("k", 4)
        l = p.get("l", 2)
        mode = p.get("mode", "node")
        if not (1 <= l <= k) or n < k + 2:
            raise InvalidParams("tmc generation needs 1 <= l <= k and n >= k + 2")
        for round_no in range(200):
            g = _random_connected_graph(rng, n, p.get("extra", n // 2), wmin, wmax)
            client = rng.randrange(n)
            pool = [v for v in range(n) if v != client and not g.has_edge(client, v)]
            if len(pool) < k:
                continue
            services = rng.sample(pool, k)
            inst = TmcInstance.build(g, services, client, l, mode)
            finite = 0
            for s in services:
                if mode == "node":
                    w, big = _node_cut_weight(
                        g, frozenset([s]), frozenset([client]), protected=frozenset(services)
                    )
                else:
                    w, big = _edge_cut_weight(g, frozenset([s]), frozenset([client]))
                finite += w < big
            if finite >= l:
                return InstanceDocument("tmc", inst, rng_seed=seed)
        raise InvalidParams("could not generate a feasible tmc instance; relax params")

    if kind == "setcover":
        n1, k = p.get("n1", 4), p.get("k", 4)
        if n1 < 1 or k < 1:
            raise InvalidParams("setcover generation needs n1, k >= 1")
        while True:
            sets = [
                frozenset(rng.sample(range(n1), rng.randint(1, n1))) for _ in range(k)
            ]
            if frozenset().union(*sets) == frozenset(range(n1)):
                break
        sc = SetCoverInstance.build(
            n1, sets, [rng.randint(wmin, wmax) for _ in range(k)]
        )
        return InstanceDocument("setcover", sc, rng_seed=seed)

    if kind == "cover":
        n = p.get("n", 6)
        m1 = p.get("m1", 4)
        kind_cover = p.get("kind_cover", "max")
        coll = [frozenset(rng.sample(range(n), rng.randint(1, max(1, n // 2)))) for _ in range(m1)]
        if kind_cover == "max":
            c = CoverInstance.build("max", n, coll, n1=p.get("param", max(1, n // 2)))
        else:
            c = CoverInstance.build("min", n, coll, m=p.get("param", max(1, m1 // 2)))
        return InstanceDocument("cover", c, rng_seed=seed)

    # interdiction: built from a random max-cover instance via its reduction
    doc = generate_random("cover", {**p, "kind_cover": "max"}, seed)
    inst, _cert = reduce_maxcover_to_interdiction(doc.payload)
    return InstanceDocument(
        "interdiction",
        inst,
        provenance=(("reduction", "maxcover-to-interdiction"),),
        rng_seed=seed,
    )
