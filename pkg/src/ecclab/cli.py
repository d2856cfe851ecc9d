"""Command-line front end: generation, exact/approximate solving, the
treewidth solver, the 2-vs-3 reduction, sidecar verification, and a small
benchmark harness.

Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage error, 3 capacity
cap exceeded.  All randomness flows from --seed through named substreams, so
one seed reproduces a run byte for byte (bench wall-time columns excepted).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .approx import (
    approx_min_diameter,
    approx_min_diameter_dag,
    approx_min_radius_dag,
    approx_source_radius,
    finite_min_eccentricities,
)
from .gadgets import (
    GadgetError,
    build_dg,
    gadget_all_eccentricities,
    gadget_max_radius,
    gadget_median,
    gadget_min_diameter_dag,
    gadget_min_diameter_weighted,
    gadget_min_radius_dag,
    gadget_radius_23,
    gadget_roundtrip_diameter,
    gadget_roundtrip_radius,
    gadget_source_radius,
    gadget_undirected_diameter_23,
)
from .graph import INF, GraphFormatError, read_graph, write_graph
from .oracle import (
    DEFAULT_CAP,
    VARIANTS,
    CapacityError,
    VariantError,
    exact_eccentricities,
    exact_median,
)
from .reduce23 import DIAMETER, RADIUS, reduce_decision23_to_set_system
from .seeds import substream
from .setsystem import HSE, OV, random_instance, write_set_system
from .treewidth import (
    DecompositionError,
    TreeDecomposition,
    generate_partial_ktree,
    min_degree_decomposition,
    read_td,
    tw_eccentricities,
    write_td,
)

USAGE_ERROR = 2
CAPACITY_ERROR = 3

GADGET_KINDS = {
    "radius-23": (HSE, lambda inst, a: gadget_radius_23(inst, sparsify=a.sparsify)),
    "source-radius": (HSE, lambda inst, a: gadget_source_radius(inst, _t(inst, a))),
    "max-radius": (HSE, lambda inst, a: gadget_max_radius(inst, _t(inst, a))),
    "roundtrip-radius": (HSE, lambda inst, a: gadget_roundtrip_radius(inst)),
    "min-radius-dag": (HSE, lambda inst, a: gadget_min_radius_dag(inst, _t(inst, a))),
    "median": (HSE, lambda inst, a: gadget_median(inst)),
    "min-diameter-dag": (OV, lambda inst, a: gadget_min_diameter_dag(inst)),
    "min-diameter-weighted": (
        OV,
        lambda inst, a: gadget_min_diameter_weighted(inst, _t_even(inst, a)),
    ),
    "undirected-diameter-23": (OV, lambda inst, a: gadget_undirected_diameter_23(inst)),
    "roundtrip-diameter": (OV, lambda inst, a: gadget_roundtrip_diameter(inst)),
    "all-eccentricities": (OV, lambda inst, a: gadget_all_eccentricities(inst)),
}

APPROX_ALGORITHMS = (
    "source-radius",
    "min-diameter",
    "min-diameter-dag",
    "min-radius-dag",
    "finite-min-ecc",
)


def _t(inst, args):
    return args.t if args.t is not None else max(2, inst.d)


def _t_even(inst, args):
    t = _t(inst, args)
    return t if t % 2 == 0 else t + 1


def threads_cap():
    """Worker-count cap from ECCLAB_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("ECCLAB_THREADS", "1")))
    except ValueError:
        return 1


def _read_text(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_text(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit(args, text):
    if getattr(args, "output", None):
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)


def _load_graph(args):
    if not args.input:
        raise SystemExit2("--input is required")
    return read_graph(_read_text(args.input))


class SystemExit2(Exception):
    """Usage error carrying a message; mapped to exit code 2."""


# ---------------------------------------------------------------------------
# gen


def cmd_gen(args):
    rng = substream(args.seed, f"gen:{args.kind}")
    if args.kind == "partial-ktree":
        g, td = generate_partial_ktree(
            args.n, args.k, args.edge_keep_prob, rng, directed=args.directed
        )
        _write_text(args.output + ".graph", write_graph(g))
        _write_text(args.output + ".td", write_td(td, g.n))
        print(f"partial-ktree n={g.n} m={g.m} k={args.k} width={td.width}")
        return 0
    if args.kind == "dg":
        g = build_dg(args.size, args.t if args.t is not None else 1)
        _write_text(args.output + ".graph", write_graph(g))
        print(f"dg n={g.n} m={g.m}")
        return 0
    if args.kind not in GADGET_KINDS:
        raise SystemExit2(f"unknown generator kind {args.kind!r}")
    mode, build = GADGET_KINDS[args.kind]
    inst = random_instance(args.na, args.nb, args.d, mode, rng, density=args.density)
    try:
        out = build(inst, args)
    except GadgetError as exc:
        raise SystemExit2(f"gadget rejected the instance: {exc}")
    _write_text(args.output + ".graph", write_graph(out.graph))
    _write_text(args.output + ".json", out.to_sidecar_json())
    _write_text(args.output + ".ss", write_set_system(inst))
    rel, value = out.expected()
    print(
        f"{args.kind} n={out.graph.n} m={out.graph.m} answer={out.answer} "
        f"yes_value={out.yes_value} no_bound={out.no_bound} expected={rel}:{value}"
    )
    return 0


# ---------------------------------------------------------------------------
# exact / approx / tw


def cmd_exact(args):
    g = _load_graph(args)
    if args.quantity == "median":
        vertex, total = exact_median(g, cap=args.cap)
        enc = "inf" if total == INF else total
        if args.format == "json":
            _emit(args, json.dumps({"median": vertex, "sum": enc}, sort_keys=True) + "\n")
        else:
            _emit(args, f"median\tsum\n{vertex}\t{enc}\n")
        return 0
    report = exact_eccentricities(g, args.variant, cap=args.cap)
    _emit(args, report.to_json() if args.format == "json" else report.to_tsv())
    return 0


def cmd_approx(args):
    g = _load_graph(args)
    rng = substream(args.seed, f"approx:{args.algorithm}")
    if args.algorithm == "source-radius":
        res = approx_source_radius(g, rng)
    elif args.algorithm == "min-diameter":
        res = approx_min_diameter(g, rng, args.epsilon)
    elif args.algorithm == "min-diameter-dag":
        res = approx_min_diameter_dag(g)
    elif args.algorithm == "min-radius-dag":
        res = approx_min_radius_dag(g)
    elif args.algorithm == "finite-min-ecc":
        finite = finite_min_eccentricities(g)
        if args.format == "json":
            _emit(args, json.dumps({"finite": finite}, sort_keys=True) + "\n")
        else:
            lines = ["vertex\tfinite"]
            for v, ok in enumerate(finite):
                lines.append(f"{v}\t{int(ok)}")
            _emit(args, "\n".join(lines) + "\n")
        return 0
    else:
        raise SystemExit2(f"unknown algorithm {args.algorithm!r}")
    est = "inf" if res.estimate == INF else res.estimate
    lo, hi = res.guarantee
    if args.format == "json":
        payload = {
            "estimate": est,
            "witness": res.witness,
            "guarantee": [str(lo), str(hi)],
            "whp": res.whp,
        }
        _emit(args, json.dumps(payload, sort_keys=True) + "\n")
    else:
        _emit(
            args,
            "estimate\twitness\tlo\thi\twhp\n"
            f"{est}\t{res.witness}\t{lo}\t{hi}\t{res.whp}\n",
        )
    return 0


def cmd_tw(args):
    g = _load_graph(args)
    if args.td:
        td = read_td(_read_text(args.td))
    else:
        td = min_degree_decomposition(g)
    report = tw_eccentricities(g, td, args.variant)
    _emit(args, report.to_json() if args.format == "json" else report.to_tsv())
    return 0


# ---------------------------------------------------------------------------
# reduce


def cmd_reduce(args):
    g = _load_graph(args)
    rng = substream(args.seed, "reduce")
    res = reduce_decision23_to_set_system(
        g, args.target, rng, delta=args.delta, rounds=args.rounds
    )
    if args.format == "json":
        payload = {
            "value": res.value,
            "target": res.target,
            "rounds_used": res.rounds_used,
            "delta": res.delta,
            "hash_width": res.hash_width,
        }
        _emit(args, json.dumps(payload, sort_keys=True) + "\n")
    else:
        _emit(args, f"target\tvalue\n{res.target}\t{res.value}\n")
    return 0


# ---------------------------------------------------------------------------
# verify


def _verified_value(g, sidecar, args):
    quantity = sidecar["quantity"]
    variant = sidecar["variant"]
    if quantity == "median":
        _, total = exact_median(g, cap=args.cap)
        return total
    if args.td:
        td = read_td(_read_text(args.td))
        report = tw_eccentricities(g, td, variant)
    else:
        report = exact_eccentricities(g, variant, cap=args.cap)
    if quantity == "radius":
        return report.radius
    if quantity == "diameter":
        return report.diameter
    if quantity == "eccentricities":
        return report.ecc
    raise SystemExit2(f"sidecar has unknown quantity {quantity!r}")


def _expected_from_sidecar(sidecar):
    side = "yes" if sidecar["answer"] else "no"
    if side == sidecar["eq_side"]:
        return "eq", sidecar["yes_value"]
    return "ge", sidecar["no_bound"]


def cmd_verify(args):
    g = _load_graph(args)
    if not args.sidecar:
        raise SystemExit2("--sidecar is required for verify")
    sidecar = json.loads(_read_text(args.sidecar))
    value = _verified_value(g, sidecar, args)
    if sidecar["quantity"] == "eccentricities":
        expected = sidecar["extras"]["expected_a_ecc"]
        a_ids = sidecar["witness_map"]["a"]
        got = [value[v] for v in a_ids]
        ok = got == expected
        hub = sidecar["extras"].get("hub")
        if ok and hub is not None:
            ok = value[hub] == sidecar["extras"]["hub_ecc"]
        print(f"{'PASS' if ok else 'FAIL'} per-vertex expected={expected} got={got}")
        return 0 if ok else 1
    rel, target = _expected_from_sidecar(sidecar)
    ok = value == target if rel == "eq" else value >= target
    print(f"{'PASS' if ok else 'FAIL'} {sidecar['quantity']} {rel} {target}, computed {value}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# bench


def _bench_rows(args):
    rng = substream(args.seed, "bench")
    sizes = args.sizes or [50, 100, 200]
    rows = []
    for n in sizes:
        for k in args.ks or [3]:
            g, td = generate_partial_ktree(n, k, 0.8, rng, directed=False)
            affordable = args.cap is None or g.n <= args.cap
            oracle = exact_eccentricities(g, "undirected", cap=None) if affordable else None
            t0 = time.perf_counter()
            approx = approx_source_radius(g, substream(args.seed, f"bench:approx:{n}:{k}"))
            t_approx = time.perf_counter() - t0
            ratio = ""
            if oracle is not None and oracle.radius:
                ratio = f"{approx.estimate / oracle.radius:.4f}"
            rows.append(
                (
                    "approx_source_radius",
                    n,
                    g.m,
                    k,
                    f"{t_approx:.6f}",
                    approx.estimate,
                    oracle.radius if oracle else "",
                    ratio,
                )
            )
            t0 = time.perf_counter()
            tw_report = tw_eccentricities(g, td, "undirected")
            t_tw = time.perf_counter() - t0
            ratio = ""
            if oracle is not None:
                ratio = "1.0000" if tw_report.ecc == oracle.ecc else "mismatch"
            rows.append(
                (
                    "tw_eccentricities",
                    n,
                    g.m,
                    k,
                    f"{t_tw:.6f}",
                    tw_report.radius,
                    oracle.radius if oracle else "",
                    ratio,
                )
            )
    return rows


def cmd_bench(args):
    header = "algorithm\tn\tm\tk\twall_time\testimate\toracle\tratio"
    rows = _bench_rows(args)
    lines = [header] + ["\t".join(str(c) for c in row) for row in rows]
    _emit(args, "\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def _add_common(p):
    p.add_argument("--input", help="input graph file")
    p.add_argument("--output", help="output file (default stdout)")
    p.add_argument("--variant", choices=VARIANTS, default="undirected")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "tsv"), default="tsv")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="oracle capacity cap")


def build_parser():
    parser = argparse.ArgumentParser(prog="ecclab")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph (gadget, partial k-tree, or DAG block)")
    _add_common(p)
    p.add_argument("--kind", required=True)
    p.add_argument("--na", type=int, default=8)
    p.add_argument("--nb", type=int, default=8)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--sparsify", action="store_true")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--edge-keep-prob", type=float, default=0.8)
    p.add_argument("--size", type=int, default=8)
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("exact", help="exact eccentricities or median by brute force")
    _add_common(p)
    p.add_argument("--quantity", choices=("eccentricities", "median"), default="eccentricities")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("approx", help="approximation algorithms")
    _add_common(p)
    p.add_argument("--algorithm", choices=APPROX_ALGORITHMS, required=True)
    p.add_argument("--epsilon", type=float, default=0.5)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("tw", help="exact eccentricities via a tree decomposition")
    _add_common(p)
    p.add_argument("--td", help="decomposition file (default: greedy heuristic)")
    p.set_defaults(func=cmd_tw)

    p = sub.add_parser("reduce", help="2-vs-3 decision via the hashing reduction")
    _add_common(p)
    p.add_argument("--target", choices=(DIAMETER, RADIUS), required=True)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--rounds", type=int, default=20)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="recompute a sidecar's promise and compare")
    _add_common(p)
    p.add_argument("--sidecar", help="sidecar JSON file")
    p.add_argument("--td", help="use this decomposition instead of the oracle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timing/ratio table over generated inputs")
    _add_common(p)
    p.add_argument("--sizes", type=int, nargs="*", default=None)
    p.add_argument("--ks", type=int, nargs="*", default=None)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already; normalize others.
        return exc.code if exc.code in (0, USAGE_ERROR) else USAGE_ERROR
    try:
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (GraphFormatError, VariantError, DecompositionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAPACITY_ERROR


if __name__ == "__main__":
    sys.exit(main())
