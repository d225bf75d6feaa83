"""Command-line entry point.

Exit status: 0 on success, 1 when the answer is "no flow" (solve, sparse,
oracle) or "not critical" (bounds), 2 on usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import families, formats
from .criticality import NotCriticalError, bounds_report, certify_criticality, survey
from .flows import OracleTooLargeError, oracle_nz_flow
from .multigraph import GraphError, MultiGraph
from .solver import FlowFound, IrrelevantEdge, NoFlow, solve_components, solve_sparse

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read_graph(path: str, fmt: str) -> MultiGraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise formats.FormatError("empty graph6 file", 1)
        return formats.parse_graph6(lines[0])
    return formats.parse_edgelist(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _flow_lines(g: MultiGraph, flow) -> list[str]:
    return [f"{e} {t}->{h} {x}" for (e, t, h), x in zip(g.edges, flow.values)]


def _cmd_solve(args, g: MultiGraph) -> int:
    out = solve_components(g)
    if isinstance(out, FlowFound):
        if args.json:
            print(_dump(formats.flow_document(g, out.flow)))
        else:
            print("flow exists")
            print("\n".join(_flow_lines(g, out.flow)))
        return EXIT_OK
    if args.json:
        print(_dump(formats.no_flow_document(out.reason.value)))
    else:
        print(f"no flow: {out.reason.value}")
    return EXIT_NO


def _cmd_sparse(args, g: MultiGraph) -> int:
    out, budget = solve_sparse(g)
    if isinstance(out, FlowFound):
        doc = formats.flow_document(g, out.flow)
        doc["branch"] = out.via.value
        status = EXIT_OK
    elif isinstance(out, NoFlow):
        doc = formats.no_flow_document(out.reason.value)
        status = EXIT_NO
    else:
        doc = formats.irrelevant_document(out.edge, out.provenance.value)
        status = EXIT_OK
    doc["budget"] = budget.as_dict()
    if args.json:
        print(_dump(doc))
    else:
        if isinstance(out, FlowFound):
            print(f"flow exists ({out.via.value})")
            print("\n".join(_flow_lines(g, out.flow)))
        elif isinstance(out, NoFlow):
            print(f"no flow: {out.reason.value}")
        else:
            print(f"irrelevant edge: {out.edge} ({out.provenance.value})")
        b = budget.as_dict()
        print("budget: " + " ".join(f"{k}={v}" for k, v in b.items()))
    return status


def _cmd_oracle(args, g: MultiGraph) -> int:
    flow = oracle_nz_flow(g)
    if flow is None:
        if args.json:
            print(_dump(formats.no_flow_document("exhaustive search")))
        else:
            print("no flow: exhaustive search")
        return EXIT_NO
    if args.json:
        print(_dump(formats.flow_document(g, flow)))
    else:
        print("flow exists")
        print("\n".join(_flow_lines(g, flow)))
    return EXIT_OK


def _cmd_critical(args, g: MultiGraph) -> int:
    rep = certify_criticality(g)
    if args.json:
        print(_dump(rep.as_dict()))
    else:
        print(f"critical: {str(rep.is_critical).lower()}")
        if rep.flow is not None:
            print("evidence: nowhere-zero flow")
            print("\n".join(_flow_lines(g, rep.flow)))
        elif rep.failing_edge is not None:
            print(f"evidence: contracting edge {rep.failing_edge} leaves no nowhere-zero flow")
        elif not rep.connected:
            print("evidence: graph is disconnected")
    return EXIT_OK


def _cmd_bounds(args, g: MultiGraph) -> int:
    rep = certify_criticality(g)
    try:
        b = bounds_report(g, rep)
    except NotCriticalError:
        if args.json:
            print(_dump({"critical": False}))
        else:
            print("not critical: bounds apply to critical graphs only")
        return EXIT_NO
    if args.json:
        print(_dump({"critical": True, **b.as_dict()}))
    else:
        for k, v in b.as_dict().items():
            print(f"{k}: {v}")
    return EXIT_OK


def _cmd_irrelevant(args, g: MultiGraph) -> int:
    out, _ = solve_sparse(g)
    if isinstance(out, IrrelevantEdge):
        if args.json:
            print(_dump(formats.irrelevant_document(out.edge, out.provenance.value)))
        else:
            print(f"irrelevant edge: {out.edge} ({out.provenance.value})")
    else:
        if args.json:
            print(_dump({"irrelevant_edge": None}))
        else:
            print("none")
    return EXIT_OK


def _cmd_gen(args) -> int:
    try:
        g = families.generate(args.name, *args.params, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "graph6":
        print(formats.emit_graph6(g))
    else:
        sys.stdout.write(formats.emit_edgelist(g))
    return EXIT_OK


def _cmd_survey(args) -> int:
    try:
        census = survey(args.max_n, simple_only=not args.multigraphs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(_dump(census.as_dict()))
    else:
        for e in census.entries:
            print(f"n={e.n} examined={e.examined} critical={len(e.critical)} ell={e.ell}  [{e.universe}]")
            for g in e.critical:
                print("  " + " ".join(f"{t}-{h}" for t, h in g.endpoint_list()))
        print(f"all bounds held: {str(census.all_bounds_held).lower()}")
        print(f"lemma violations: {census.lemma_violations}")
    return EXIT_OK


GRAPH_COMMANDS = {
    "solve": (_cmd_solve, "find a nowhere-zero Z3-flow (contract-and-lift solver)"),
    "sparse": (_cmd_sparse, "one pass of the sparse algorithm with its budget"),
    "oracle": (_cmd_oracle, "brute-force search over the flow space"),
    "critical": (_cmd_critical, "certify Z3-flow-criticality"),
    "bounds": (_cmd_bounds, "density bounds for a critical graph"),
    "irrelevant": (_cmd_irrelevant, "report an irrelevant edge, or none"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="nzflow", description="Nowhere-zero Z3-flows on multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in GRAPH_COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file", help="graph file, or - for stdin")
    p = sub.add_parser("gen", parents=[common], help="emit a named graph family")
    p.add_argument("name", choices=families.FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p = sub.add_parser("survey", parents=[common], help="exhaustive census of small critical graphs")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--multigraphs", action="store_true", help="loopless multigraphs for n <= 3")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "survey":
            return _cmd_survey(args)
        g = _read_graph(args.file, args.format)
        handler, _ = GRAPH_COMMANDS[args.command]
        return handler(args, g)
    except (UsageError, formats.FormatError, GraphError, OracleTooLargeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
