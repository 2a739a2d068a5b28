"""Command-line interface: solve, reduce, verify, gen, bench.

Exit codes: 0 success, 1 error, 2 infeasible instance, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bisection, cpmc, planar, tmc
from .errors import GencutError, Infeasible, NoFiniteCut
from .generate import generate_random
from .graph import INF, CutSolution
from .io import (
    RESULT_SCHEMA,
    InstanceDocument,
    parse_dimacs,
    parse_instance,
    serialize_instance,
)
from .reductions import (
    reduce_bisection_to_tmec,
    reduce_maxcover_to_interdiction,
    reduce_setcover_to_directed_cpmec,
    reduce_setcover_to_multipartner_cpmec,
    verify_certificate,
)

USAGE_ERROR = 64
INFEASIBLE = 2

_REDUCTIONS = {
    ("setcover", "cpmec-directed"): reduce_setcover_to_directed_cpmec,
    ("setcover", "cpmec-multi"): reduce_setcover_to_multipartner_cpmec,
    ("graph", "tmec"): reduce_bisection_to_tmec,
    ("cover", "interdiction"): reduce_maxcover_to_interdiction,
}

_TARGET_KIND = {
    "cpmec-directed": "cpmc",
    "cpmec-multi": "cpmc",
    "tmec": "tmc",
    "interdiction": "interdiction",
}


def _load(path: str) -> InstanceDocument:
    text = Path(path).read_text()
    if text.lstrip().startswith(("c", "p")) and not text.lstrip().startswith("{"):
        return InstanceDocument("graph", parse_dimacs(text))
    return parse_instance(text)


def _solve_dispatch(args, doc: InstanceDocument) -> CutSolution:
    problem, algo = args.problem, args.algo
    mode = "node" if problem.endswith("nc") else "edge"
    if problem in ("cpmnc", "cpmec"):
        if doc.kind != "cpmc":
            raise GencutError(f"problem {problem} needs a cpmc instance, got {doc.kind}")
        inst = doc.payload
        if inst.mode != mode:
            raise GencutError(f"instance mode {inst.mode!r} does not match {problem}")
        if algo == "exact":
            return cpmc.solve_cpmc_exact(inst)
        if algo == "2v2-planar":
            if not inst.preserve_destination_side or len(inst.destinations) != 2:
                raise GencutError("2v2-planar expects a two-pair instance")
            emb = planar.build_embedding(inst.graph)
            return planar.solve_2v2_planar_cpmec(
                emb,
                inst.source,
                inst.partners[0],
                inst.destinations[0],
                inst.destinations[1],
            )
        raise GencutError(f"algo {algo!r} does not apply to {problem}")
    if problem in ("tmnc", "tmec"):
        if doc.kind != "tmc":
            raise GencutError(f"problem {problem} needs a tmc instance, got {doc.kind}")
        inst = doc.payload
        if inst.mode != mode:
            raise GencutError(f"instance mode {inst.mode!r} does not match {problem}")
        if algo == "exact":
            return tmc.solve_tmc_exact(inst)
        if algo == "lp-rounding":
            if problem != "tmnc":
                raise GencutError("lp-rounding applies to tmnc")
            return tmc.solve_tmnc_lp(inst)
        if algo == "bisection":
            if problem != "tmec":
                raise GencutError("the bisection algorithm applies to tmec")
            return bisection.solve_tmec_via_bisection(inst, backend=args.backend)
        raise GencutError(f"algo {algo!r} does not apply to {problem}")
    raise GencutError(f"unknown problem {problem!r}")


def _oracle_value(doc: InstanceDocument):
    """Exact optimum when the oracle can afford it, plus a label."""
    from .errors import InstanceTooLarge

    try:
        if doc.kind == "tmc":
            return tmc.solve_tmc_exact(doc.payload).weight, "exact"
        if doc.kind == "cpmc":
            sol = cpmc.solve_cpmc_exact(doc.payload)
            return (sol.weight if sol.feasible else None), "exact"
    except InstanceTooLarge:
        if doc.kind == "tmc" and doc.payload.mode == "node":
            return tmc.tmnc_lp_lower_bound(doc.payload), "lp-lower-bound"
    return None, "none"


def _emit_solution(args, sol: CutSolution) -> None:
    if getattr(args, "json", False):
        out = {
            "problem": args.problem,
            "algo": args.algo,
            "status": "optimal" if args.algo == "exact" else "feasible",
            "kind": sol.kind,
            "value": sol.weight if sol.weight != INF else None,
            "members": list(sol.members),
            "components": [list(c) for c in sol.components],
        }
        if getattr(args, "backend", None):
            out["backend"] = args.backend
        if not sol.feasible:
            out["status"] = "infeasible"
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"{args.problem} via {args.algo}: weight {sol.weight}")
        print(f"  members: {list(sol.members)}")
        print(f"  components: {[list(c) for c in sol.components]}")


def cmd_solve(args) -> int:
    doc = _load(args.infile)
    try:
        sol = _solve_dispatch(args, doc)
    except (Infeasible, NoFiniteCut) as exc:
        if args.json:
            print(
                json.dumps(
                    {"problem": args.problem, "algo": args.algo, "status": "infeasible"},
                    sort_keys=True,
                )
            )
        else:
            print(f"infeasible: {exc}")
        return INFEASIBLE
    if not sol.feasible:
        _emit_solution(args, sol)
        return INFEASIBLE
    _emit_solution(args, sol)
    return 0


def cmd_reduce(args) -> int:
    key = (args.src, args.dst)
    if key not in _REDUCTIONS:
        options = ", ".join(f"{a}->{b}" for a, b in sorted(_REDUCTIONS))
        raise GencutError(f"no reduction {args.src} -> {args.dst}; available: {options}")
    doc = _load(args.infile)
    if doc.kind != args.src:
        raise GencutError(f"reduction expects a {args.src} document, got {doc.kind}")
    inst, cert = _REDUCTIONS[key](doc.payload)
    out_doc = InstanceDocument(
        _TARGET_KIND[args.dst],
        inst,
        provenance=(
            ("reduction", cert.name),
            ("source_file", args.infile),
            ("source_kind", args.src),
        ),
    )
    Path(args.outfile).write_text(serialize_instance(out_doc))
    cert_path = args.cert or args.outfile + ".cert.json"
    cert_obj = {
        "reduction": cert.name,
        "source": json.loads(serialize_instance(doc)),
        "target": json.loads(serialize_instance(out_doc)),
        "value_relation": {
            "scale": cert.value_relation.scale,
            "offset_lo": cert.value_relation.offset_lo,
            "offset_hi": cert.value_relation.offset_hi,
            "sense": cert.value_relation.sense,
        },
    }
    Path(cert_path).write_text(json.dumps(cert_obj, sort_keys=True, indent=1) + "\n")
    print(f"wrote {args.outfile} and {cert_path}")
    return 0


def _rebuild_certificate(cert_obj: dict):
    src_doc = parse_instance(json.dumps(cert_obj["source"]))
    name = cert_obj["reduction"]
    for (src_kind, dst), fn in _REDUCTIONS.items():
        inst, cert = None, None
        if src_kind == src_doc.kind:
            inst, cert = fn(src_doc.payload)
            if cert.name == name:
                return cert
    raise GencutError(f"unknown reduction {name!r} in certificate")


def cmd_verify(args) -> int:
    cert_obj = json.loads(Path(args.cert).read_text())
    cert = _rebuild_certificate(cert_obj)
    source_sol = json.loads(Path(args.source_sol).read_text())
    target_sol = json.loads(Path(args.target_sol).read_text())
    verdict = verify_certificate(cert, source_sol, target_sol)
    if verdict.ok:
        print("certificate verified: forward/backward maps and value relation hold")
        return 0
    for v in verdict.violations:
        print(f"violation: {v}")
    return 1


def cmd_gen(args) -> int:
    params = json.loads(args.params) if args.params else {}
    for item in args.set or []:
        k, _, v = item.partition("=")
        params[k] = int(v) if v.lstrip("-").isdigit() else v
    doc = generate_random(args.kind, params, args.seed)
    text = serialize_instance(doc)
    if args.outfile:
        Path(args.outfile).write_text(text)
        print(f"wrote {args.outfile}")
    else:
        sys.stdout.write(text)
    return 0


def _bench_entry(entry) -> dict:
    doc = _load(entry["instance"])
    ns = argparse.Namespace(
        problem=entry["problem"],
        algo=entry["algo"],
        backend=entry.get("backend", "exact"),
        json=False,
    )
    start = time.perf_counter()
    try:
        sol = _solve_dispatch(ns, doc)
        value = sol.weight if sol.feasible else None
    except (Infeasible, NoFiniteCut):
        value = None
    wall = time.perf_counter() - start
    oracle, oracle_kind = _oracle_value(doc)
    ratio = None
    if value is not None and oracle:
        ratio = value / oracle
    return {
        "instance": entry["instance"],
        "problem": entry["problem"],
        "algo": entry["algo"],
        "value": value,
        "oracle_value": oracle,
        "oracle_kind": oracle_kind,
        "ratio": ratio,
        "wall_time_s": round(wall, 6),
    }


def cmd_bench(args) -> int:
    import os

    suite = json.loads(Path(args.suite).read_text())
    # solves are pure functions, so independent entries may run on worker
    # threads; GENCUT_THREADS overrides the default sequential run
    workers = int(os.environ.get("GENCUT_THREADS", "1"))
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_bench_entry, suite["entries"]))
    else:
        rows = [_bench_entry(entry) for entry in suite["entries"]]
    if args.json:
        print(json.dumps({"results": rows}, sort_keys=True))
    else:
        header = f"{'instance':30} {'problem':7} {'algo':12} {'value':>8} {'oracle':>8} {'ratio':>7} {'time(s)':>9}"
        print(header)
        print("-" * len(header))
        for r in rows:
            ratio = f"{r['ratio']:.3f}" if r["ratio"] is not None else "-"
            oracle = r["oracle_value"] if r["oracle_value"] is not None else "-"
            value = r["value"] if r["value"] is not None else "infeas"
            print(
                f"{r['instance']:30} {r['problem']:7} {r['algo']:12} {value!s:>8} "
                f"{oracle!s:>8} {ratio:>7} {r['wall_time_s']:>9.4f}"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gencut", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve an instance file")
    sp.add_argument("--problem", required=True, choices=["cpmnc", "cpmec", "tmnc", "tmec"])
    sp.add_argument(
        "--algo", required=True, choices=["exact", "lp-rounding", "bisection", "2v2-planar"]
    )
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--backend", choices=["exact", "local-search"], default="exact")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_solve)

    rp = sub.add_parser("reduce", help="transform an instance, emitting a certificate")
    rp.add_argument("--from", dest="src", required=True, choices=["setcover", "graph", "cover"])
    rp.add_argument(
        "--to",
        dest="dst",
        required=True,
        choices=["cpmec-directed", "cpmec-multi", "tmec", "interdiction"],
    )
    rp.add_argument("--in", dest="infile", required=True)
    rp.add_argument("--out", dest="outfile", required=True)
    rp.add_argument("--cert")
    rp.set_defaults(func=cmd_reduce)

    vp = sub.add_parser("verify", help="audit a solution pair against a certificate")
    vp.add_argument("--cert", required=True)
    vp.add_argument("--source-sol", dest="source_sol", required=True)
    vp.add_argument("--target-sol", dest="target_sol", required=True)
    vp.set_defaults(func=cmd_verify)

    gp = sub.add_parser("gen", help="generate a reproducible random instance")
    gp.add_argument("--kind", required=True)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--params", help="JSON object of generator parameters")
    gp.add_argument("--set", action="append", help="key=value generator parameter")
    gp.add_argument("--out", dest="outfile")
    gp.set_defaults(func=cmd_gen)

    bp = sub.add_parser("bench", help="run a suite and report values, ratios, timings")
    bp.add_argument("--suite", required=True)
    bp.add_argument("--json", action="store_true")
    bp.set_defaults(func=cmd_bench)
    return ap


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except GencutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(cli_main())
