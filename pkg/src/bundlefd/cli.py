"""Command-line interface.

Subcommands: gen (emit graph/bundle files), metrics (fault diameters),
check (theorem checks), route (fault-avoiding routing), search (find the
kappa/lambda gap witnesses), report (the cycle-over-cycle twist survey).

Graphs and bundles are named inline with a small spec language, so no
files are needed for the common cases:

    C4  K5  K4-e  P6  Q3  circulant(16,1,4)
    product(K4-e,K4-e)            product of two graph specs
    bundle(C4,C4,rot1)            cycle over cycle, twist rot<k>/ref<k>/id
                                  on the wraparound base edge

Exit codes: 0 all checks hold / command succeeded, 1 a VIOLATED verdict,
2 hypotheses unmet (only), 3 usage, format, or budget errors. The
enumeration budget comes from --budget, else the BUNDLEFD_BUDGET
environment variable, else the library default.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field

from ._enum import BudgetExceededError, DEFAULT_BUDGET
from .bounds import (
    BoundReport,
    Verdict,
    check_baseline_bounds,
    check_diameter_decomposition,
    check_efd_improved,
    check_mixed_connectivity_bound,
    check_mixed_fd_bounds,
    check_vfd_improved,
)
from .bundles import (
    Bundle,
    cycle_reflection,
    cycle_rotation,
    dihedral_automorphisms,
    format_bundle,
    identity_permutation,
    parse_bundle,
    product_bundle,
    twisted_torus,
)
from .fault_metrics import mixed_fault_diameter, vertex_fault_diameter
from .graphs import (
    EdgeListFormatError,
    FaultSet,
    Graph,
    circulant,
    complete,
    complete_minus_edge,
    cycle,
    diameter,
    edge_connectivity,
    format_edge_list,
    hypercube,
    parse_edge_list,
    path_graph,
    vertex_connectivity,
)
from .routing import (
    HypothesesUnmetError,
    NoPathError,
    edge_route_certificates,
    route_edge_faults,
    route_vertex_faults,
    shortest_path_oracle,
    vertex_route_certificates,
)
from .search import find_mixed_connectivity_gap

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_HYPOTHESIS_UNMET = 2
EXIT_USAGE = 3


class SpecError(ValueError):
    """Bad inline graph/bundle specification."""


@dataclass
class RunConfig:
    """One CLI invocation after parsing: the command plus its inputs."""

    command: str
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    as_json: bool = False
    options: dict = field(default_factory=dict)


# --- inline spec language ---------------------------------------------


_ATOM = re.compile(r"^(C|K|P|Q)(\d+)(-e)?$")


def _split_args(text: str) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise SpecError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current).strip())
    return parts


def parse_graph_spec(spec: str) -> Graph:
    spec = spec.strip()
    m = _ATOM.match(spec)
    if m:
        family, size, minus_e = m.group(1), int(m.group(2)), m.group(3)
        if minus_e:
            if family != "K":
                raise SpecError(f"only complete graphs take '-e': {spec!r}")
            return complete_minus_edge(size)
        try:
            return {
                "C": cycle,
                "K": complete,
                "P": path_graph,
                "Q": hypercube,
            }[family](size)
        except ValueError as exc:
            raise SpecError(str(exc))
    if spec.startswith("circulant(") and spec.endswith(")"):
        args = _split_args(spec[len("circulant("):-1])
        try:
            numbers = [int(a) for a in args]
        except ValueError:
            raise SpecError(f"circulant takes integers: {spec!r}")
        if len(numbers) < 2:
            raise SpecError("circulant needs n and at least one step")
        try:
            return circulant(numbers[0], numbers[1:])
        except ValueError as exc:
            raise SpecError(str(exc))
    if spec.startswith("product(") and spec.endswith(")"):
        args = _split_args(spec[len("product("):-1])
        if len(args) != 2:
            raise SpecError("product takes exactly two graph specs")
        return parse_bundle_spec(spec).total
    raise SpecError(f"unknown graph spec {spec!r}")


def _parse_twist_name(name: str, fibre: Graph):
    name = name.strip()
    if name == "id":
        return identity_permutation(fibre.n)
    m = re.match(r"^(rot|ref)(\d+)$", name)
    if not m:
        raise SpecError(f"unknown twist name {name!r} (use id, rot<k>, ref<k>)")
    if fibre != cycle(fibre.n):
        raise SpecError("rot/ref twists need a cycle fibre")
    k = int(m.group(2))
    return (cycle_rotation if m.group(1) == "rot" else cycle_reflection)(
        fibre.n, k % fibre.n
    )


def parse_bundle_spec(spec: str) -> Bundle:
    spec = spec.strip()
    if spec.startswith("product(") and spec.endswith(")"):
        args = _split_args(spec[len("product("):-1])
        if len(args) != 2:
            raise SpecError("product takes exactly two graph specs")
        return product_bundle(parse_graph_spec(args[0]),
                              parse_graph_spec(args[1]))
    if spec.startswith("bundle(") and spec.endswith(")"):
        args = _split_args(spec[len("bundle("):-1])
        if len(args) != 3:
            raise SpecError("bundle takes base spec, fibre spec, twist name")
        base = parse_graph_spec(args[0])
        fibre = parse_graph_spec(args[1])
        twist = _parse_twist_name(args[2], fibre)
        if base != cycle(base.n):
            raise SpecError("bundle(...) twists go on a cycle base's "
                            "wraparound edge; use a bundle file otherwise")
        return twisted_torus(base.n, twist) if base.n == fibre.n else \
            _cycle_base_bundle(base, fibre, twist)
    raise SpecError(f"unknown bundle spec {spec!r} (use product(...) or bundle(...))")


def _cycle_base_bundle(base: Graph, fibre: Graph, twist) -> Bundle:
    from .bundles import build_bundle

    return build_bundle(base, fibre, {(base.n - 1, 0): twist})


def _load_graph(args) -> Graph:
    if getattr(args, "graph", None):
        return parse_graph_spec(args.graph)
    if getattr(args, "graph_file", None):
        with open(args.graph_file) as fh:
            return parse_edge_list(fh.read())
    raise SpecError("no graph given (use --graph or --graph-file)")


def _load_bundle(args) -> Bundle:
    if getattr(args, "bundle", None):
        return parse_bundle_spec(args.bundle)
    if getattr(args, "bundle_file", None):
        with open(args.bundle_file) as fh:
            return parse_bundle(fh.read())
    raise SpecError("no bundle given (use --bundle or --bundle-file)")


# --- commands -----------------------------------------------------------


def _emit(lines) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _report_exit(report: BoundReport) -> int:
    if report.verdict == Verdict.VIOLATED:
        return EXIT_VIOLATED
    if report.verdict == Verdict.HYPOTHESIS_UNMET:
        return EXIT_HYPOTHESIS_UNMET
    return EXIT_OK


def _cmd_gen(args, config: RunConfig) -> int:
    if args.bundle or args.bundle_file:
        text = format_bundle(_load_bundle(args))
    else:
        text = format_edge_list(_load_graph(args))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_metrics(args, config: RunConfig) -> int:
    if args.bundle or args.bundle_file:
        g = _load_bundle(args).total
    else:
        g = _load_graph(args)
    p, q = args.vertex_faults, args.edge_faults
    result = mixed_fault_diameter(g, p, q, budget=config.budget,
                                  workers=config.workers)
    if config.as_json:
        payload = {
            "graph_hash": g.canonical_hash(),
            "n": g.n,
            "m": g.edge_count,
            "vertex_faults": p,
            "edge_faults": q,
            "value": "inf" if result.value == float("inf") else result.value,
            "witness": None
            if result.witness is None
            else {
                "vertices": list(result.witness.sorted_vertices()),
                "edges": [list(e) for e in result.witness.sorted_edges()],
            },
            "witness_pair": result.witness_pair,
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    w = result.witness
    _emit([
        f"graph.hash={g.canonical_hash()}",
        f"n={g.n}",
        f"m={g.edge_count}",
        f"vertex_faults={p}",
        f"edge_faults={q}",
        f"value={'inf' if result.value == float('inf') else result.value}",
        "witness.vertices=" + (",".join(map(str, w.sorted_vertices())) if w else ""),
        "witness.edges=" + (",".join(f"{u}-{v}" for u, v in w.sorted_edges()) if w else ""),
        "witness.pair=" + (",".join(map(str, result.witness_pair))
                           if result.witness_pair else ""),
    ])
    return EXIT_OK


_THEOREMS = {
    "vfd-improved": lambda b, args, kw: check_vfd_improved(b, args.a, args.b, **kw),
    "efd-improved": lambda b, args, kw: check_efd_improved(b, args.a, args.b, **kw),
    "vfd-plus-one": lambda b, args, kw: check_baseline_bounds(
        b, args.a, args.b, "vertex", **kw),
    "efd-plus-one": lambda b, args, kw: check_baseline_bounds(
        b, args.a, args.b, "edge", **kw),
    "mixed-conn": lambda b, args, kw: check_mixed_connectivity_bound(
        b, args.pf, args.qf, args.pb, args.qb,
        budget=kw["budget"]),
    "mixed-fd": lambda b, args, kw: check_mixed_fd_bounds(
        b, args.p, args.q, args.side, **kw),
    "diam-decomp": lambda b, args, kw: check_diameter_decomposition(
        b, budget=kw["budget"]),
}


def _cmd_check(args, config: RunConfig) -> int:
    b = _load_bundle(args)
    kw = {"budget": config.budget, "workers": config.workers}
    report = _THEOREMS[args.theorem](b, args, kw)
    if config.as_json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        _emit(report.to_lines())
    return _report_exit(report)


def _parse_fault_args(vertex_text: str, edge_text: str) -> FaultSet:
    vertices = []
    if vertex_text:
        try:
            vertices = [int(v) for v in vertex_text.split(",") if v.strip()]
        except ValueError:
            raise SpecError(f"bad --fault-vertices {vertex_text!r}")
    edges = []
    if edge_text:
        for token in edge_text.split(","):
            token = token.strip()
            if not token:
                continue
            m = re.match(r"^(\d+)-(\d+)$", token)
            if not m:
                raise SpecError(f"bad edge token {token!r} in --fault-edges")
            edges.append((int(m.group(1)), int(m.group(2))))
    return FaultSet.of(vertices=vertices, edges=edges)


def _cmd_route(args, config: RunConfig) -> int:
    b = _load_bundle(args)
    faults = _parse_fault_args(args.fault_vertices, args.fault_edges)
    lines = [
        f"bundle.total.hash={b.total.canonical_hash()}",
        f"theorem={args.theorem}",
        f"source={args.source}",
        f"target={args.target}",
        "faults.vertices=" + ",".join(map(str, faults.sorted_vertices())),
        "faults.edges=" + ",".join(f"{u}-{v}" for u, v in faults.sorted_edges()),
    ]
    try:
        if args.theorem == "vfd":
            certs = vertex_route_certificates(b, args.a, args.b,
                                              budget=config.budget)
            bound = certs.fibre_vertex_fd + certs.base_vertex_fd
            path, trace = route_vertex_faults(b, faults, args.source,
                                              args.target, args.a, args.b, certs)
        else:
            certs = edge_route_certificates(b, args.a, args.b,
                                            budget=config.budget)
            bound = certs.fibre_edge_fd + certs.base_edge_fd
            path, trace = route_edge_faults(b, faults, args.source,
                                            args.target, args.a, args.b, certs)
    except HypothesesUnmetError as exc:
        lines.append(f"notice=theorem hypotheses unmet ({exc}); "
                     "falling back to the shortest-path oracle")
        try:
            path = shortest_path_oracle(b, faults, args.source, args.target)
            lines.append("path=" + ",".join(map(str, path.vertices)))
            lines.append(f"length={path.length}")
        except NoPathError:
            lines.append("path=")
            lines.append("length=inf")
        _emit(lines)
        return EXIT_HYPOTHESIS_UNMET
    oracle = shortest_path_oracle(b, faults, args.source, args.target)
    lines.extend([
        "path=" + ",".join(map(str, path.vertices)),
        f"length={path.length}",
        f"bound={bound}",
        f"oracle_length={oracle.length}",
        f"branch={trace.branch.value}" + (
            f"/{trace.subcase}" if trace.subcase else ""),
    ])
    if config.as_json:
        print(json.dumps({
            "path": list(path.vertices),
            "length": path.length,
            "bound": bound,
            "oracle_length": oracle.length,
            "branch": trace.branch.value,
            "subcase": trace.subcase,
        }, indent=2))
    else:
        _emit(lines)
    return EXIT_OK


def _graph_summary_lines(tag: str, g: Graph) -> list[str]:
    from .graphs import is_mixed_connected

    return [
        f"{tag}.hash={g.canonical_hash()}",
        f"{tag}.n={g.n}",
        f"{tag}.edges=" + ",".join(f"{u}-{v}" for u, v in g.edges),
        f"{tag}.kappa={vertex_connectivity(g)}",
        f"{tag}.lambda={edge_connectivity(g)}",
        f"{tag}.mixed_1_1_connected={is_mixed_connected(g, 1, 1)}",
    ]


def _cmd_search(args, config: RunConfig) -> int:
    if not args.mixed_connectivity_gap:
        raise SpecError("search currently supports --mixed-connectivity-gap")
    result = find_mixed_connectivity_gap(args.max_vertices, seed=args.seed)
    if config.as_json:
        print(json.dumps({
            "attempts": result.attempts,
            "seed": result.seed,
            "fragile": {"n": result.fragile.n,
                        "edges": [list(e) for e in result.fragile.edges]},
            "robust": {"n": result.robust.n,
                       "edges": [list(e) for e in result.robust.edges]},
        }, indent=2))
        return EXIT_OK
    lines = [f"attempts={result.attempts}", f"seed={result.seed}"]
    lines += _graph_summary_lines("fragile", result.fragile)
    lines += _graph_summary_lines("robust", result.robust)
    _emit(lines)
    return EXIT_OK


def twisted_torus_report(n: int = 4, *, budget: int = DEFAULT_BUDGET,
                         workers: int = 1) -> list[dict]:
    """Survey all 2n automorphisms of the n-cycle as the single wraparound
    twist of a cycle-over-cycle bundle: diameter, one-fault diameters, the
    3-vertex-fault diameter, whether the one-fault equality chain holds,
    and whether the unconditional bound 2 D^V_1(C_n) + 1 is attained."""
    fibre = cycle(n)
    dv1_cn = vertex_fault_diameter(fibre, 1, budget=budget).value
    target = 2 * dv1_cn + 1
    rows = []
    for name, perm in dihedral_automorphisms(n):
        b = twisted_torus(n, perm)
        decomp = check_diameter_decomposition(b, budget=budget)
        baseline = check_baseline_bounds(b, 1, 1, "vertex", budget=budget,
                                         workers=workers)
        rows.append({
            "twist": name,
            "total_hash": b.total.canonical_hash(),
            "diameter": decomp.extras["total_diameter"],
            "vertex_fd_1": decomp.extras["total_vertex_fd_1"],
            "edge_fd_1": decomp.extras["total_edge_fd_1"],
            "vertex_fd_3": baseline.lhs,
            "baseline_verdict": baseline.verdict.value,
            "equality_chain": decomp.extras["equality_chain"],
            "attains_plus_one_bound": baseline.lhs == target,
        })
    return rows


def _cmd_report(args, config: RunConfig) -> int:
    if not args.twisted_torus:
        raise SpecError("report currently supports --twisted-torus")
    rows = twisted_torus_report(args.n, budget=config.budget,
                                workers=config.workers)
    target = 2 * vertex_fault_diameter(cycle(args.n), 1).value + 1
    if config.as_json:
        print(json.dumps({"n": args.n, "target": target, "rows": rows},
                         indent=2))
        return EXIT_OK
    header = (f"{'twist':>6} {'diam':>5} {'DV1':>4} {'DE1':>4} {'DV3':>4} "
              f"{'baseline':>20} {'chain':>6} {'tight':>6}")
    lines = [f"single-edge twists of C{args.n} over C{args.n}; "
             f"+1 bound target DV3={target}", header]
    for row in rows:
        lines.append(
            f"{row['twist']:>6} {row['diameter']:>5} {row['vertex_fd_1']:>4} "
            f"{row['edge_fd_1']:>4} {row['vertex_fd_3']:>4} "
            f"{row['baseline_verdict']:>20} "
            f"{str(row['equality_chain']):>6} "
            f"{str(row['attains_plus_one_bound']):>6}"
        )
    matching = [r["twist"] for r in rows if r["attains_plus_one_bound"]]
    lines.append("twists_attaining_bound=" + ",".join(matching))
    _emit(lines)
    return EXIT_OK


# --- argument parsing -----------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None,
                   help="enumeration budget (subgraph evaluations)")
    p.add_argument("--workers", type=int, default=1,
                   help="parallelism degree for enumeration")
    p.add_argument("--json", action="store_true", dest="as_json",
                   help="structured JSON output")


def _add_graph_inputs(p: argparse.ArgumentParser, bundle_only=False) -> None:
    if not bundle_only:
        p.add_argument("--graph", help="inline graph spec (e.g. C4, K4-e)")
        p.add_argument("--graph-file", help="edge-list file")
    p.add_argument("--bundle", help="inline bundle spec (product(...)/bundle(...))")
    p.add_argument("--bundle-file", help="bundle file (BASE/FIBRE/TWISTS)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bundlefd",
        description="Fault diameters, mixed connectivity, theorem checks, "
                    "and fault-avoiding routing on Cartesian graph bundles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph or bundle in text format")
    _add_graph_inputs(p)
    p.add_argument("--out", help="output file (default stdout)")
    _add_common(p)

    p = sub.add_parser("metrics", help="exact (p,q) mixed fault diameter")
    _add_graph_inputs(p)
    p.add_argument("--vertex-faults", type=int, default=0)
    p.add_argument("--edge-faults", type=int, default=0)
    _add_common(p)

    p = sub.add_parser("check", help="verify a theorem bound on a bundle")
    _add_graph_inputs(p, bundle_only=True)
    p.add_argument("--theorem", required=True, choices=sorted(_THEOREMS))
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--side", choices=["fibre", "base"], default="fibre")
    p.add_argument("--pf", type=int, default=0)
    p.add_argument("--qf", type=int, default=0)
    p.add_argument("--pb", type=int, default=0)
    p.add_argument("--qb", type=int, default=0)
    _add_common(p)

    p = sub.add_parser("route", help="fault-avoiding route from the bound proofs")
    _add_graph_inputs(p, bundle_only=True)
    p.add_argument("--theorem", choices=["vfd", "efd"], required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--fault-vertices", default="",
                   help="comma-separated vertex ids")
    p.add_argument("--fault-edges", default="",
                   help="comma-separated u-v pairs")
    _add_common(p)

    p = sub.add_parser("search", help="search for extremal example graphs")
    p.add_argument("--mixed-connectivity-gap", action="store_true")
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--seed", type=int, default=2718)
    _add_common(p)

    p = sub.add_parser("report", help="multi-instance survey reports")
    p.add_argument("--twisted-torus", action="store_true")
    p.add_argument("--n", type=int, default=4)
    _add_common(p)

    return parser


_COMMANDS = {
    "gen": _cmd_gen,
    "metrics": _cmd_metrics,
    "check": _cmd_check,
    "route": _cmd_route,
    "search": _cmd_search,
    "report": _cmd_report,
}


def _resolve_budget(value) -> int:
    if value is not None:
        return value
    env = os.environ.get("BUNDLEFD_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SpecError(f"BUNDLEFD_BUDGET must be an integer, got {env!r}")
    return DEFAULT_BUDGET


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            command=args.command,
            budget=_resolve_budget(getattr(args, "budget", None)),
            workers=getattr(args, "workers", 1),
            as_json=getattr(args, "as_json", False),
        )
        if config.budget <= 0:
            raise SpecError("budget must be positive")
        if config.workers <= 0:
            raise SpecError("workers must be positive")
        return _COMMANDS[args.command](args, config)
    except (SpecError, EdgeListFormatError, BudgetExceededError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
