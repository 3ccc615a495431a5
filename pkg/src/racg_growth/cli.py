"""Command line interface.

Exit codes: 0 success, 1 usage, 2 graph file error, 3 domain or
method/input mismatch, 4 methods disagree.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .algebra import RationalFunction, SingularSystemError, series_coefficients
from .formulas import (
    GroupKind,
    build_and_solve_system,
    closed_formula_raag,
    closed_formula_racg,
)
from .geodesics import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    automaton_census,
    brute_census,
    build_automaton,
    raag_census_via_double,
)
from .graph import (
    GraphError,
    LinkRegularParams,
    SimplicialGraph,
    check_link_regular,
    double,
    enumerate_cliques,
    f_polynomial,
    generate_family,
)
from .graphfile import GraphFileError, read_graph, write_graph_file

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_MISMATCH = 4

METHODS = ("formula", "linsys", "automaton", "brute", "raag-brute", "raag-double")
DEFAULT_MAX_LEN = 12
DEFAULT_BRUTE_LEN = 7


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    graph: SimplicialGraph | None = None
    input: str = ""
    params: LinkRegularParams | None = None
    method: str = "automaton"
    kind: GroupKind = GroupKind.RACG
    max_len: int = DEFAULT_MAX_LEN
    brute_len: int = DEFAULT_BRUTE_LEN
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    fmt: str = "text"


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _dec(values) -> list[str]:
    return [str(v) for v in values]


def _parse_params(text: str) -> LinkRegularParams:
    try:
        n, l, q = (int(x) for x in text.split(","))
        params = LinkRegularParams(n, l, q)
    except ValueError as exc:
        raise CliError(f"bad --params {text!r}: {exc}", EXIT_DOMAIN) from None
    for problem in params.realizability_problems():
        _warn(f"no graph realizes {params.as_tuple()}: {problem}")
    return params


def graph_params(graph: SimplicialGraph) -> LinkRegularParams:
    """Parameters of a graph inside the closed formula's domain, or CliError."""
    try:
        verdict = check_link_regular(graph)
    except GraphError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    if not verdict.link_regular:
        a, b = verdict.witness
        raise CliError(
            f"graph is not link-regular: cliques {list(a)} and {list(b)} have links of "
            f"sizes {verdict.witness_link_sizes[0]} and {verdict.witness_link_sizes[1]}",
            EXIT_DOMAIN,
        )
    if not verdict.tetra_free:
        raise CliError("graph contains a 4-clique", EXIT_DOMAIN)
    return verdict.params


# ---------------------------------------------------------------------------
# reports


def analyze_report(graph: SimplicialGraph, input_desc: str = "") -> dict:
    cliques = enumerate_cliques(graph)
    report = {
        "command": "analyze",
        "input": input_desc,
        "n": graph.vertex_count,
        "edges": graph.edge_count,
        "triangles": sum(1 for c in cliques if len(c) == 3),
        "tetra_free": all(len(c) < 4 for c in cliques),
        "f_poly": [int(c) for c in f_polynomial(graph).coeffs],
    }
    if graph.vertex_count == 0:
        report["link_regular"] = False
        return report
    verdict = check_link_regular(graph)
    if verdict.link_regular:
        report["link_regular"] = list(verdict.params.as_tuple())
    else:
        report["link_regular"] = False
        report["witness"] = {
            "cliques": [list(c) for c in verdict.witness],
            "link_sizes": list(verdict.witness_link_sizes),
        }
    return report


def _solve(method: str, kind: GroupKind, params: LinkRegularParams) -> RationalFunction:
    if method == "formula":
        return closed_formula_racg(params) if kind is GroupKind.RACG else closed_formula_raag(params)
    target = params if kind is GroupKind.RACG else params.doubled()
    try:
        return build_and_solve_system(target).g
    except SingularSystemError as exc:
        raise CliError(f"linear system is singular for {target.as_tuple()}: {exc}", EXIT_DOMAIN) from None


def compute_series(cfg: RunConfig, method: str, length: int) -> tuple[list, RationalFunction | None]:
    """Coefficients ``0..length`` of ``cfg``'s group by one method."""
    kind = cfg.kind
    if method in ("raag-brute", "raag-double") and kind is not GroupKind.RAAG:
        raise CliError(f"method {method} needs --group raag", EXIT_DOMAIN)
    if method in ("formula", "linsys"):
        params = cfg.params or (graph_params(cfg.graph) if cfg.graph is not None else None)
        if params is None:
            raise CliError(f"method {method} needs --params or a graph", EXIT_DOMAIN)
        g = _solve(method, kind, params)
        return series_coefficients(g, length), g
    if cfg.graph is None:
        raise CliError(f"method {method} needs --graph", EXIT_DOMAIN)
    try:
        if method == "automaton":
            graph = cfg.graph if kind is GroupKind.RACG else double(cfg.graph)
            return list(automaton_census(build_automaton(graph), length).counts), None
        if method == "raag-double":
            return list(raag_census_via_double(cfg.graph, length).counts), None
        if method in ("brute", "raag-brute"):
            return list(brute_census(cfg.graph, length, kind, cfg.budget, cfg.workers).counts), None
    except BudgetExceeded as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None
    raise CliError(f"unknown method {method!r}", EXIT_USAGE)


def series_report(cfg: RunConfig) -> dict:
    coeffs, g = compute_series(cfg, cfg.method, cfg.max_len)
    report = {
        "command": "series",
        "input": cfg.input,
        "method": cfg.method,
        "group": cfg.kind.value,
        "coefficients": _dec(coeffs),
    }
    if g is not None:
        report["numerator"] = _dec(g.num.integer_coefficients())
        report["denominator"] = _dec(g.den.integer_coefficients())
    params = cfg.params or _try_params(cfg.graph)
    if params is not None:
        report["params"] = list(params.as_tuple())
    return report


def _try_params(graph):
    if graph is None or graph.vertex_count == 0:
        return None
    verdict = check_link_regular(graph)
    return verdict.params if verdict.in_formula_regime else None


def applicable_methods(cfg: RunConfig) -> list[str]:
    methods = []
    if cfg.params is not None or _try_params(cfg.graph) is not None:
        methods += ["formula", "linsys"]
    if cfg.graph is not None:
        if cfg.kind is GroupKind.RACG:
            methods += ["automaton", "brute"]
        else:
            methods += ["raag-double", "raag-brute"]
    return methods


def compare_report(
    cfg: RunConfig,
    overrides: dict[str, Callable[[int], list]] | None = None,
) -> dict:
    """Run every applicable method and tabulate per-length agreement.

    ``overrides`` maps a method name to a replacement ``length -> coefficients``
    callable; used to inject a known-bad route when testing the harness.
    """
    overrides = overrides or {}
    methods = applicable_methods(cfg)
    if not methods:
        raise CliError("nothing to compare: give --graph or --params", EXIT_DOMAIN)
    results: dict[str, list] = {}
    for m in methods:
        length = cfg.brute_len if m in ("brute", "raag-brute") else cfg.max_len
        if m in overrides:
            results[m] = list(overrides[m](length))
        else:
            results[m] = compute_series(cfg, m, length)[0]

    top = max(len(v) for v in results.values())
    per_length = []
    first_mismatch = None
    for k in range(top):
        values = {m: results[m][k] for m in methods if k < len(results[m])}
        agree = len(set(values.values())) == 1
        per_length.append(agree)
        if not agree and first_mismatch is None:
            first_mismatch = {"length": k, "values": {m: str(v) for m, v in values.items()}}
    report = {
        "command": "compare",
        "input": cfg.input,
        "method": methods,
        "group": cfg.kind.value,
        "coefficients": {m: _dec(v) for m, v in results.items()},
        "agreement": {
            "all": first_mismatch is None,
            "per_length": per_length,
            "first_mismatch": first_mismatch,
        },
    }
    params = cfg.params or _try_params(cfg.graph)
    if params is not None:
        report["params"] = list(params.as_tuple())
    return report


# ---------------------------------------------------------------------------
# text rendering


def render_text(report: dict) -> str:
    cmd = report.get("command")
    lines = []
    if cmd == "analyze":
        lines.append(f"input:        {report['input']}")
        lines.append(f"vertices:     {report['n']}")
        lines.append(f"edges:        {report['edges']}")
        lines.append(f"triangles:    {report['triangles']}")
        lines.append(f"tetra-free:   {'yes' if report['tetra_free'] else 'no'}")
        lr = report["link_regular"]
        if lr:
            lines.append(f"link-regular: yes (n, l, q) = ({lr[0]}, {lr[1]}, {lr[2]})")
        else:
            lines.append("link-regular: no")
            if "witness" in report:
                (a, b), (sa, sb) = report["witness"]["cliques"], report["witness"]["link_sizes"]
                lines.append(f"  witness:    |Link{a}| = {sa}, |Link{b}| = {sb}")
        lines.append(f"f-polynomial: {report['f_poly']}")
    elif cmd == "series":
        lines.append(f"input:        {report['input']}")
        lines.append(f"group:        {report['group']}")
        lines.append(f"method:       {report['method']}")
        if "params" in report:
            lines.append(f"params:       {tuple(report['params'])}")
        if "numerator" in report:
            lines.append(f"numerator:    {report['numerator']}")
            lines.append(f"denominator:  {report['denominator']}")
        for k, c in enumerate(report["coefficients"]):
            lines.append(f"  {k:>3}  {c}")
    elif cmd == "compare":
        methods = report["method"]
        coeffs = report["coefficients"]
        lines.append(f"input:  {report['input']}")
        lines.append(f"group:  {report['group']}")
        if "params" in report:
            lines.append(f"params: {tuple(report['params'])}")
        width = max([len(m) for m in methods] + [max((len(c) for v in coeffs.values() for c in v), default=1)])
        lines.append("  len  " + "  ".join(m.rjust(width) for m in methods) + "  agree")
        for k, ok in enumerate(report["agreement"]["per_length"]):
            cells = [(coeffs[m][k] if k < len(coeffs[m]) else "-").rjust(width) for m in methods]
            lines.append(f"  {k:>3}  " + "  ".join(cells) + ("  yes" if ok else "  NO"))
        fm = report["agreement"]["first_mismatch"]
        lines.append("all methods agree" if fm is None else f"first mismatch at length {fm['length']}")
    else:
        lines.append(json.dumps(report, sort_keys=True))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument handling


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="racg-growth", description="Geodesic growth of right-angled Coxeter and Artin groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_source(p, params=True):
        src = p.add_mutually_exclusive_group(required=not params)
        src.add_argument("--graph", metavar="PATH", help="graph file")
        src.add_argument("--family", metavar="SPEC", help="named graph, e.g. cycle:5 or petersen")
        if params:
            src.add_argument("--params", metavar="N,L,Q", help="link-regular parameters instead of a graph")

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")

    p = sub.add_parser("analyze", help="clique and link-regularity summary of a graph")
    graph_source(p, params=False)
    common(p)

    for name, help_ in (("series", "coefficients of the geodesic growth series"),
                        ("compare", "run every applicable method and check agreement")):
        p = sub.add_parser(name, help=help_)
        graph_source(p)
        if name == "series":
            p.add_argument("--method", choices=METHODS, default=None)
        p.add_argument("--group", choices=("racg", "raag"), default=None)
        p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
        p.add_argument("--brute-len", type=int, default=DEFAULT_BRUTE_LEN)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--workers", type=int, default=1, help="processes for the brute-force census")
        common(p)

    p = sub.add_parser("double", help="emit the double of a graph")
    graph_source(p, params=False)
    p.add_argument("--output", metavar="PATH")

    p = sub.add_parser("gen", help="emit a named graph")
    p.add_argument("family", metavar="SPEC", help="discrete:N, cycle:N, complete:N, complete_bipartite:A,B, petersen, triangle_double:M")
    p.add_argument("--output", metavar="PATH")
    return parser


def _load_graph(args) -> tuple[SimplicialGraph | None, str]:
    if getattr(args, "graph", None):
        try:
            return read_graph(args.graph), args.graph
        except OSError as exc:
            raise CliError(f"cannot read {args.graph}: {exc.strerror}", EXIT_PARSE) from None
        except (GraphFileError, GraphError) as exc:
            raise CliError(f"{args.graph}: {exc}", EXIT_PARSE) from None
    if getattr(args, "family", None):
        try:
            return generate_family(args.family), args.family
        except GraphError as exc:
            raise CliError(str(exc), EXIT_DOMAIN) from None
    return None, ""


def _config(args) -> RunConfig:
    graph, desc = _load_graph(args)
    params = None
    if getattr(args, "params", None):
        params = _parse_params(args.params)
        desc = f"params {args.params}"
    method = getattr(args, "method", None)
    group = args.group
    if group is None:
        group = "raag" if method in ("raag-brute", "raag-double") else "racg"
    kind = GroupKind(group)
    if method is None:
        method = "formula" if graph is None else ("automaton" if kind is GroupKind.RACG else "raag-double")
    for flag in ("max_len", "brute_len"):
        if getattr(args, flag) < 0:
            raise CliError(f"--{flag.replace('_', '-')} must be nonnegative", EXIT_USAGE)
    if args.budget < 1 or args.workers < 1:
        raise CliError("--budget and --workers must be positive", EXIT_USAGE)
    return RunConfig(
        command=args.command,
        graph=graph,
        input=desc,
        params=params,
        method=method,
        kind=kind,
        max_len=args.max_len,
        brute_len=args.brute_len,
        budget=args.budget,
        workers=args.workers,
        fmt=args.format,
    )


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _format(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    return render_text(report)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code = EXIT_OK
    if args.command == "gen":
        try:
            text = write_graph_file(generate_family(args.family))
        except GraphError as exc:
            raise CliError(str(exc), EXIT_DOMAIN) from None
    elif args.command == "double":
        graph, _ = _load_graph(args)
        text = write_graph_file(double(graph))
    elif args.command == "analyze":
        graph, desc = _load_graph(args)
        text = _format(analyze_report(graph, desc), args.format)
    elif args.command == "series":
        cfg = _config(args)
        text = _format(series_report(cfg), cfg.fmt)
    else:
        cfg = _config(args)
        report = compare_report(cfg)
        text = _format(report, cfg.fmt)
        if not report["agreement"]["all"]:
            code = EXIT_MISMATCH
    _emit(text, args.output)
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        # argparse exits on usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
