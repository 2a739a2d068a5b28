"""Instance documents: a self-describing JSON format plus a DIMACS-style importer.

One text format covers every instance kind the solvers understand;
documents carry optional provenance (which reduction produced them) and
the RNG seed that generated them. Serialization is canonical (sorted
keys, fixed separators) so round-trips are byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping

import jsonschema

from .cpmc import CpmcInstance
from .errors import BoundsError, ParseError, SchemaError
from .graph import INF, WeightedGraph
from .reductions import CoverInstance, InterdictionInstance, SetCoverInstance
from .tmc import TmcInstance

FORMAT_VERSION = 1

_WEIGHT = {"anyOf": [{"type": "integer", "minimum": 1}, {"const": "INF"}]}

_GRAPH_SCHEMA = {
    "type": "object",
    "required": ["n", "edges"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "directed": {"type": "boolean"},
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "prefixItems": [{"type": "integer"}, {"type": "integer"}, _WEIGHT],
                "minItems": 2,
                "maxItems": 3,
            },
        },
        "node_weights": {"type": "array", "items": _WEIGHT},
    },
}

_PAYLOAD_SCHEMAS = {
    "graph": _GRAPH_SCHEMA,
    "cpmc": {
        "type": "object",
        "required": ["graph", "mode", "source", "partners", "destinations"],
        "additionalProperties": False,
        "properties": {
            "graph": _GRAPH_SCHEMA,
            "mode": {"enum": ["node", "edge"]},
            "source": {"type": "integer"},
            "partners": {"type": "array", "items": {"type": "integer"}, "minItems": 1},
            "destinations": {"type": "array", "items": {"type": "integer"}, "minItems": 1},
            "budget": {"type": "integer", "minimum": 1},
            "preserve_destination_side": {"type": "boolean"},
        },
    },
    "tmc": {
        "type": "object",
        "required": ["graph", "mode", "services", "client", "threshold"],
        "additionalProperties": False,
        "properties": {
            "graph": _GRAPH_SCHEMA,
            "mode": {"enum": ["node", "edge"]},
            "services": {"type": "array", "items": {"type": "integer"}, "minItems": 1},
            "client": {"type": "integer"},
            "threshold": {"type": "integer", "minimum": 1},
            "budget": {"type": "integer", "minimum": 1},
        },
    },
    "setcover": {
        "type": "object",
        "required": ["n_elements", "sets"],
        "additionalProperties": False,
        "properties": {
            "n_elements": {"type": "integer", "minimum": 1},
            "sets": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer"}},
                "minItems": 1,
            },
            "weights": {"type": "array", "items": {"type": "integer", "minimum": 1}},
            "budget": {"type": "integer", "minimum": 1},
        },
    },
    "cover": {
        "type": "object",
        "required": ["kind", "n_elements", "collection"],
        "additionalProperties": False,
        "properties": {
            "kind": {"enum": ["min", "max"]},
            "n_elements": {"type": "integer", "minimum": 1},
            "collection": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer"}},
                "minItems": 1,
            },
            "m": {"type": "integer", "minimum": 1},
            "n1": {"type": "integer", "minimum": 0},
        },
    },
    "interdiction": {
        "type": "object",
        "required": ["n", "arcs", "source", "sink"],
        "additionalProperties": False,
        "properties": {
            "n": {"type": "integer", "minimum": 2},
            "arcs": {
                "type": "array",
                "items": {
                    "type": "array",
                    "prefixItems": [
                        {"type": "integer"},
                        {"type": "integer"},
                        _WEIGHT,
                        _WEIGHT,
                    ],
                    "minItems": 4,
                    "maxItems": 4,
                },
            },
            "source": {"type": "integer"},
            "sink": {"type": "integer"},
            "budget": {"type": "integer", "minimum": 1},
        },
    },
}

DOCUMENT_SCHEMA = {
    "type": "object",
    "required": ["format_version", "kind", "payload"],
    "additionalProperties": False,
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "kind": {"enum": sorted(_PAYLOAD_SCHEMAS)},
        "payload": {"type": "object"},
        "provenance": {"type": "object"},
        "rng_seed": {"type": "integer"},
    },
}

#: Schema for ``--json`` solver output emitted by the CLI.
RESULT_SCHEMA = {
    "type": "object",
    "required": ["problem", "algo", "status"],
    "additionalProperties": False,
    "properties": {
        "problem": {"type": "string"},
        "algo": {"type": "string"},
        "backend": {"type": "string"},
        "status": {"enum": ["optimal", "feasible", "infeasible"]},
        "kind": {"enum": ["node", "edge", "path"]},
        "value": {"type": ["integer", "number", "null"]},
        "members": {"type": "array", "items": {"type": "integer"}},
        "components": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}},
        },
    },
}


@dataclass(frozen=True)
class InstanceDocument:
    """A parsed instance plus its format metadata."""

    kind: str
    payload: Any  # WeightedGraph | CpmcInstance | TmcInstance | ...
    provenance: tuple | None = None
    rng_seed: int | None = None
    format_version: int = FORMAT_VERSION


def _weight_out(w):
    return "INF" if w == INF else w


def _weight_in(w):
    return INF if w == "INF" else w


def _graph_to_obj(g: WeightedGraph) -> dict:
    return {
        "n": g.n,
        "directed": g.directed,
        "edges": [
            [u, v, _weight_out(g.edge_weights[eid])] for eid, (u, v) in enumerate(g.edges)
        ],
        "node_weights": [_weight_out(w) for w in g.node_weights],
    }


def _graph_from_obj(obj: Mapping) -> WeightedGraph:
    edges = []
    weights = []
    for item in obj["edges"]:
        u, v = item[0], item[1]
        edges.append((u, v))
        weights.append(_weight_in(item[2]) if len(item) > 2 else 1)
    node_weights = [_weight_in(w) for w in obj["node_weights"]] if "node_weights" in obj else None
    return WeightedGraph.build(
        obj["n"],
        edges,
        node_weights=node_weights,
        edge_weights=weights,
        directed=obj.get("directed", False),
    )


def _payload_to_obj(kind: str, payload) -> dict:
    if kind == "graph":
        return _graph_to_obj(payload)
    if kind == "cpmc":
        out = {
            "graph": _graph_to_obj(payload.graph),
            "mode": payload.mode,
            "source": payload.source,
            "partners": list(payload.partners),
            "destinations": list(payload.destinations),
        }
        if payload.budget is not None:
            out["budget"] = payload.budget
        if payload.preserve_destination_side:
            out["preserve_destination_side"] = True
        return out
    if kind == "tmc":
        out = {
            "graph": _graph_to_obj(payload.graph),
            "mode": payload.mode,
            "services": list(payload.services),
            "client": payload.client,
            "threshold": payload.threshold,
        }
        if payload.budget is not None:
            out["budget"] = payload.budget
        return out
    if kind == "setcover":
        out = {
            "n_elements": payload.n_elements,
            "sets": [sorted(s) for s in payload.sets],
            "weights": list(payload.weights),
        }
        if payload.budget is not None:
            out["budget"] = payload.budget
        return out
    if kind == "cover":
        out = {
            "kind": payload.kind,
            "n_elements": payload.n_elements,
            "collection": [sorted(s) for s in payload.collection],
        }
        if payload.m is not None:
            out["m"] = payload.m
        if payload.n1 is not None:
            out["n1"] = payload.n1
        return out
    if kind == "interdiction":
        out = {
            "n": payload.n,
            "arcs": [
                [u, v, _weight_out(payload.capacity[i]), _weight_out(payload.block_cost[i])]
                for i, (u, v) in enumerate(payload.arcs)
            ],
            "source": payload.source,
            "sink": payload.sink,
        }
        if payload.budget is not None:
            out["budget"] = payload.budget
        return out
    raise ValueError(f"unknown kind {kind!r}")


def _payload_from_obj(kind: str, obj: Mapping):
    if kind == "graph":
        return _graph_from_obj(obj)
    if kind == "cpmc":
        return CpmcInstance.build(
            _graph_from_obj(obj["graph"]),
            obj["source"],
            obj["partners"],
            obj["destinations"],
            obj["mode"],
            budget=obj.get("budget"),
            preserve_destination_side=obj.get("preserve_destination_side", False),
        )
    if kind == "tmc":
        return TmcInstance.build(
            _graph_from_obj(obj["graph"]),
            obj["services"],
            obj["client"],
            obj["threshold"],
            obj["mode"],
            budget=obj.get("budget"),
        )
    if kind == "setcover":
        return SetCoverInstance.build(
            obj["n_elements"],
            [frozenset(s) for s in obj["sets"]],
            obj.get("weights"),
            budget=obj.get("budget"),
        )
    if kind == "cover":
        return CoverInstance.build(
            obj["kind"],
            obj["n_elements"],
            [frozenset(s) for s in obj["collection"]],
            m=obj.get("m"),
            n1=obj.get("n1"),
        )
    if kind == "interdiction":
        arcs = [(a[0], a[1]) for a in obj["arcs"]]
        caps = [_weight_in(a[2]) for a in obj["arcs"]]
        costs = [_weight_in(a[3]) for a in obj["arcs"]]
        return InterdictionInstance.build(
            obj["n"], arcs, caps, costs, obj["source"], obj["sink"], budget=obj.get("budget")
        )
    raise ValueError(f"unknown kind {kind!r}")


def serialize_instance(doc: InstanceDocument) -> str:
    """Canonical JSON text for the document (stable across runs)."""
    out = {
        "format_version": doc.format_version,
        "kind": doc.kind,
        "payload": _payload_to_obj(doc.kind, doc.payload),
    }
    if doc.provenance is not None:
        out["provenance"] = {str(k): _jsonable(v) for k, v in doc.provenance}
    if doc.rng_seed is not None:
        out["rng_seed"] = doc.rng_seed
    return json.dumps(out, sort_keys=True, separators=(", ", ": "), indent=1) + "\n"


def _jsonable(v):
    if isinstance(v, (tuple, list)):
        return [_jsonable(x) for x in v]
    if v == INF:
        return "INF"
    return v


def parse_instance(data: bytes | str) -> InstanceDocument:
    """Parse and validate a document; diagnostics carry line/field positions.

    Raises ParseError for malformed text, SchemaError for structural
    violations, BoundsError for out-of-range weights.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from exc
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        jsonschema.validate(raw, DOCUMENT_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise SchemaError(f"at {path}: {exc.message}") from exc
    try:
        jsonschema.validate(raw["payload"], _PAYLOAD_SCHEMAS[raw["kind"]])
    except jsonschema.ValidationError as exc:
        path = "/".join(["payload", *(str(p) for p in exc.absolute_path)])
        raise SchemaError(f"at {path}: {exc.message}") from exc
    try:
        payload = _payload_from_obj(raw["kind"], raw["payload"])
    except BoundsError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    prov = tuple(sorted(raw["provenance"].items())) if "provenance" in raw else None
    return InstanceDocument(
        raw["kind"], payload, provenance=prov, rng_seed=raw.get("rng_seed")
    )


# -- DIMACS-style edge lists ----------------------------------------------


def parse_dimacs(text: str) -> WeightedGraph:
    """Plain-graph importer for DIMACS-style edge lists.

    Lines: ``c`` comments; ``p edge N M`` (or ``p graph N M directed``);
    ``e U V [W]`` with 1-based endpoints; optional ``n U W`` node
    weights. ``INF`` is accepted wherever a weight may appear.
    """
    n = None
    directed = False
    edges: list[tuple[int, int]] = []
    eweights: list = []
    nweights: list | None = None

    def weight_token(tok: str, lineno: int):
        if tok == "INF":
            return INF
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"line {lineno}: bad weight {tok!r}")

    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(parts) < 4:
                raise ParseError(f"line {lineno}: expected 'p edge N M'")
            n = int(parts[2])
            directed = len(parts) > 4 and parts[4] == "directed"
            nweights = [1] * n
        elif tag == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(parts) not in (3, 4):
                raise ParseError(f"line {lineno}: expected 'e U V [W]'")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
            eweights.append(weight_token(parts[3], lineno) if len(parts) == 4 else 1)
        elif tag == "n":
            if n is None:
                raise ParseError(f"line {lineno}: node weight before problem line")
            v = int(parts[1]) - 1
            if not (0 <= v < n):
                raise ParseError(f"line {lineno}: node {v + 1} out of range")
            nweights[v] = weight_token(parts[2], lineno)
        else:
            raise ParseError(f"line {lineno}: unknown record {tag!r}")
    if n is None:
        raise ParseError("missing problem line")
    try:
        return WeightedGraph.build(
            n, edges, node_weights=nweights, edge_weights=eweights, directed=directed
        )
    except BoundsError as exc:
        raise SchemaError(str(exc)) from exc
