"""Command-line front end: analyze, color, verify, generate, dfs.

Exit codes are a stable contract: 0 ok, 1 input error, 2 internal
invariant failure, 3 hypothesis violation. Text output is for humans;
JSON is the machine contract and round-trips (color output feeds verify).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import (
    METHOD_NAMES,
    BoundCertificate,
    BoundReport,
    EngineOptions,
    best_bound,
    run_method,
)
from .coloring import DEFAULT_ORACLE_CAP, Coloring, verify_acyclic
from .cycles import DEFAULT_CYCLE_CAP
from .dfs import build_dfs_tree, classify_arcs, dfs_tree_to_dot, select_root
from .digraph import (
    Digraph,
    format_edge_list,
    parse_edge_list,
    strongly_connected_components,
)
from .errors import (
    DichromaError,
    HypothesisViolated,
    InternalInvariantError,
    ParseError,
    Unreachable,
)
from .generators import GeneratorSpec

COLOR_METHODS = tuple(m for m in METHOD_NAMES if m != "chen-numeric")


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with the input-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_digraph(args) -> Digraph:
    return parse_edge_list(_read_text(args.input))


def _cycle_cap(args) -> int:
    if args.cycle_cap is not None:
        return args.cycle_cap
    env = os.environ.get("DICHROMA_CYCLE_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"DICHROMA_CYCLE_CAP is not an integer: {env!r}")
    return DEFAULT_CYCLE_CAP


def _parse_residues(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"residue list is not comma-separated integers: {text!r}")


def _engine_options(args) -> EngineOptions:
    cycle_cap = _cycle_cap(args)
    if cycle_cap < 1 or args.oracle_cap < 1:
        raise ParseError("caps must be positive")
    return EngineOptions(
        cycle_cap=cycle_cap,
        oracle_cap=args.oracle_cap,
        k=args.k,
        p=args.p,
        residues=_parse_residues(args.residues),
    )


def _hypotheses_json(cert: BoundCertificate) -> list[dict]:
    return [{"condition": h.condition, "checked": h.checked} for h in cert.hypotheses]


def _report_json(report: BoundReport) -> dict:
    return {
        "bounds": [
            {
                "name": b.name,
                "value": b.value,
                "hypotheses": _hypotheses_json(b),
                "verified": b.verified,
                "params": b.parameters,
            }
            for b in report.bounds
        ],
        "best": report.best,
        "oracle": report.oracle,
    }


def _render_report_text(d: Digraph, report: BoundReport) -> str:
    rows = []
    for b in report.bounds:
        value = "-" if b.value is None else str(b.value)
        verified = "yes" if b.verified else "no"
        note = "; ".join(h.condition for h in b.hypotheses) or "-"
        rows.append((b.name, value, verified, note))
    name_w = max([len(r[0]) for r in rows] + [len("bound")])
    val_w = max([len(r[1]) for r in rows] + [len("value")])
    lines = [f"{'bound':<{name_w}}  {'value':>{val_w}}  verified  hypotheses"]
    for name, value, verified, note in rows:
        lines.append(f"{name:<{name_w}}  {value:>{val_w}}  {verified:<8}  {note}")
    if not any(len(comp) >= 2 for comp in strongly_connected_components(d).components):
        lines.append("note: no cycle: girth/circumference undefined")
    lines.append(f"best: {'-' if report.best is None else report.best}")
    lines.append(f"oracle: {'-' if report.oracle is None else report.oracle}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    d = _read_digraph(args)
    report = best_bound(d, _engine_options(args))
    if args.format == "json":
        print(json.dumps(_report_json(report), indent=2))
    else:
        print(_render_report_text(d, report))
    return 0


def _coloring_json(d: Digraph, cert: BoundCertificate) -> dict:
    assert cert.certificate is not None
    return {
        "method": cert.certificate.method,
        "num_colors": cert.certificate.num_colors,
        "colors": {d.labels[v]: cert.certificate.colors[v] for v in range(d.n)},
        "verified": cert.verified,
    }


def cmd_color(args) -> int:
    d = _read_digraph(args)
    try:
        cert = run_method(d, args.method, _engine_options(args))
    except HypothesisViolated as exc:
        msg = f"refused: {exc}"
        if exc.witness:
            labels = " ".join(d.labels[v] for v in exc.witness)
            msg += f" (witness cycle: {labels})"
        print(msg, file=sys.stderr)
        return 3
    if cert.certificate is None:
        raise InternalInvariantError(f"method {args.method} produced no coloring")
    payload = _coloring_json(d, cert)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"method: {payload['method']}")
        print(f"value: {cert.value}")
        print(f"colors used: {payload['num_colors']}")
        print(f"verified: {'yes' if payload['verified'] else 'no'}")
        for label in d.labels:
            print(f"{label} {payload['colors'][label]}")
    return 0


def cmd_verify(args) -> int:
    d = _read_digraph(args)
    try:
        data = json.loads(_read_text(args.coloring))
    except json.JSONDecodeError as exc:
        raise ParseError(f"coloring file is not valid JSON: {exc}")
    if not isinstance(data, dict) or not isinstance(data.get("colors"), dict):
        raise ParseError('coloring JSON must be an object with a "colors" mapping')
    colors = data["colors"]
    want = set(d.labels)
    got = set(colors)
    if want != got:
        missing = sorted(want - got)
        extra = sorted(got - want)
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if extra:
            detail.append(f"unknown {extra}")
        raise ParseError("coloring labels do not match the digraph: " + ", ".join(detail))
    try:
        assignment = tuple(int(colors[label]) for label in d.labels)
    except (TypeError, ValueError):
        raise ParseError("colors must be integers")
    if any(c < 0 for c in assignment):
        raise ParseError("colors must be non-negative")
    num_colors = data.get("num_colors", max(assignment) + 1 if assignment else 0)
    if not isinstance(num_colors, int) or num_colors < max(assignment, default=-1) + 1:
        raise ParseError("num_colors is smaller than the largest color in use")
    coloring = Coloring(
        colors=assignment,
        num_colors=num_colors,
        method=str(data.get("method", "external")),
    )
    result = verify_acyclic(d, coloring)
    witness_labels = (
        [d.labels[v] for v in result.witness] if result.witness is not None else None
    )
    if args.format == "json":
        print(json.dumps({"valid": result.valid, "witness": witness_labels}, indent=2))
    elif result.valid:
        print("valid: every color class induces an acyclic subdigraph")
    else:
        print(f"invalid: monochromatic cycle {' '.join(witness_labels)}")
    return 0


def cmd_generate(args) -> int:
    residues = _parse_residues(args.residues)
    if args.family == "residue" and (args.k is None or residues is None):
        raise ParseError("the residue family requires --k and --residues")
    spec = GeneratorSpec(
        kind=args.family,
        n=args.n,
        m=args.m if args.m is not None else args.n,
        seed=args.seed,
        k=args.k if args.k is not None else 0,
        allowed=residues if residues is not None else (),
        attempts=args.attempts,
    )
    d = spec.build()
    _write_text(args.output, format_edge_list(d))
    return 0


def _spanning_root(d: Digraph) -> int:
    if d.n == 0:
        raise ParseError("digraph is empty")
    scc = strongly_connected_components(d)
    if len(scc.components) == 1:
        return select_root(d, "heuristic").root
    last_error: Unreachable | None = None
    for root in range(d.n):
        try:
            build_dfs_tree(d, root)
            return root
        except Unreachable as exc:
            last_error = exc
    raise last_error


def cmd_dfs(args) -> int:
    d = _read_digraph(args)
    if args.root is not None:
        mapping = d.index_of_label()
        if args.root not in mapping:
            raise ParseError(f"unknown vertex label: {args.root!r}")
        root = mapping[args.root]
    else:
        root = _spanning_root(d)
    tree = build_dfs_tree(d, root)
    classes = classify_arcs(d, tree)
    if args.dot is not None:
        _write_text(args.dot, dfs_tree_to_dot(d, tree))
    if args.format == "json":
        payload = {
            "root": d.labels[root],
            "t": tree.t,
            "f": {d.labels[v]: tree.label[v] for v in range(d.n)},
            "level": {d.labels[v]: tree.level[v] for v in range(d.n)},
            "parent": {
                d.labels[v]: (d.labels[tree.parent[v]] if v in tree.parent else None)
                for v in range(d.n)
            },
            "arcs": [
                {"tail": d.labels[u], "head": d.labels[v], "class": classes[(u, v)].value}
                for u, v in d.arcs
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"root: {d.labels[root]}")
        print(f"tree length t: {tree.t}")
        print("vertex  f  level  parent")
        for v in sorted(range(d.n), key=lambda x: tree.label[x]):
            parent = d.labels[tree.parent[v]] if v in tree.parent else "-"
            print(f"{d.labels[v]}  {tree.label[v]}  {tree.level[v]}  {parent}")
        print("arc classes:")
        for u, v in d.arcs:
            print(f"{d.labels[u]} {d.labels[v]}  {classes[(u, v)].value}")
    return 0


def _add_io_flags(sub, formats=("text", "json")):
    sub.add_argument("--input", "-i", default="-", help="edge-list file, - for stdin")
    sub.add_argument("--format", choices=formats, default="text")


def _add_engine_flags(sub):
    sub.add_argument("--k", type=int, default=None, help="modulus for residue bounds")
    sub.add_argument("--p", type=int, default=None, help="level window width")
    sub.add_argument(
        "--residues", default=None, help="comma-separated residue classes mod k"
    )
    sub.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    sub.add_argument("--cycle-cap", type=int, default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="dichroma", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    analyze = subs.add_parser("analyze", help="run all applicable bounds and rank them")
    _add_io_flags(analyze)
    _add_engine_flags(analyze)
    analyze.set_defaults(func=cmd_analyze)

    color = subs.add_parser("color", help="build one bound's certificate coloring")
    _add_io_flags(color)
    color.add_argument("--method", required=True, choices=COLOR_METHODS)
    _add_engine_flags(color)
    color.set_defaults(func=cmd_color)

    verify = subs.add_parser("verify", help="check a coloring JSON against a digraph")
    _add_io_flags(verify)
    verify.add_argument(
        "--coloring", "-c", required=True, help="coloring JSON file, - for stdin"
    )
    verify.set_defaults(func=cmd_verify)

    generate = subs.add_parser("generate", help="emit a generated digraph as edge list")
    generate.add_argument(
        "family", choices=("cycle", "complete", "strong", "residue")
    )
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--m", type=int, default=None)
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--k", type=int, default=None)
    generate.add_argument("--residues", default=None)
    generate.add_argument("--attempts", type=int, default=2000)
    generate.add_argument("--output", "-o", default=None)
    generate.set_defaults(func=cmd_generate)

    dfs = subs.add_parser("dfs", help="dump the DFS tree and arc classes")
    _add_io_flags(dfs)
    dfs.add_argument("--root", default=None, help="root vertex label")
    dfs.add_argument("--dot", default=None, help="write a DOT rendering to this path")
    dfs.set_defaults(func=cmd_dfs)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypothesisViolated as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (DichromaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
