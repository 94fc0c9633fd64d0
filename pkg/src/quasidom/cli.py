"""Command-line front end: solve, generate, enumerate, and verify in pipelines.

Graphs travel as graph6 lines on stdin/stdout (one per line), so subcommands
compose with standard graph tooling; every subcommand also accepts --family
or --edge-list input and supports --json output. Exit codes: 0 success,
1 refuted verification suite, 2 malformed input, 3 enumeration limits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, families, graph6, ilp, verify
from .domination import domination_chain, find_certificates, solve
from .enumeration import GraphFilter, LimitError, enumerate_connected, witness_search
from .graph import Graph, parse_edge_list

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_BAD_INPUT = 2
EXIT_LIMIT = 3


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QUASIDOM_JOBS", "1")))
    except ValueError:
        return 1


def _add_graph_inputs(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("graph", nargs="?", help="graph6 line (default: read stdin)")
    sub.add_argument("--family", metavar="SPEC", help="family spec, e.g. cycle:9")
    sub.add_argument("--edge-list", metavar="TEXT", help='edge list, e.g. "5; 0 1; 1 2"')


def _input_graphs(args: argparse.Namespace) -> list[tuple[str, Graph]]:
    if args.family:
        spec = families.parse_spec(args.family)
        return [(str(spec), families.build(spec))]
    if args.edge_list:
        return [("edge-list", parse_edge_list(args.edge_list))]
    if args.graph:
        return [(args.graph, graph6.decode(args.graph))]
    out = []
    for line in sys.stdin:
        line = line.strip()
        if line:
            out.append((line, graph6.decode(line)))
    if not out:
        raise ValueError("no input graphs (pass graph6, --family, or --edge-list)")
    return out


def _cmd_compute(args: argparse.Namespace) -> int:
    for label, g in _input_graphs(args):
        res = solve(g, args.k)
        if args.json:
            print(json.dumps(res.to_json()))
        else:
            wit = ",".join(str(v) for v in res.witness.vertices)
            print(
                f"{label}: γ1{res.k}={res.value} witness={{{wit}}} "
                f"nodes={res.nodes_expanded} millis={res.millis:.1f}"
            )
    return EXIT_OK


def _cmd_chain(args: argparse.Namespace) -> int:
    for label, g in _input_graphs(args):
        chain = domination_chain(g)
        if args.json:
            print(json.dumps({"graph6": graph6.encode(g), **chain.to_json()}))
        else:
            wits = " ".join(
                f"w{k}={{{','.join(str(v) for v in w.vertices)}}}"
                for k, w in enumerate(chain.witnesses, start=1)
            )
            print(f"{label}: {chain.summary()} | {wits}")
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = families.parse_spec(args.spec)
    g = families.build(spec)
    line = graph6.encode(g)
    if args.json:
        profile = families.expected_profile(spec)
        print(
            json.dumps(
                {
                    "spec": str(spec),
                    "graph6": line,
                    "n": g.n,
                    "expected": {
                        "gamma11": profile.gamma11,
                        "gamma12": profile.gamma12,
                        "gamma": profile.gamma,
                    },
                }
            )
        )
    else:
        print(line)
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    filt = GraphFilter(
        n=args.n,
        delta=args.delta,
        gamma=args.gamma,
        leaves=args.leaves,
        max_leaves=args.max_leaves,
        claw_free=args.claw_free,
        cograph=args.cograph,
        cubic=args.cubic,
        tree=args.tree,
    )
    lines: list[str] = []
    if args.chains and args.jobs > 1:
        pool: list[Graph] = []
        enumerate_connected(filt, pool.append)
        verify.prewarm_chains(pool, args.jobs)

    def sink(g: Graph) -> None:
        line = graph6.encode(g)
        if args.chains:
            chain = domination_chain(g)
            line = f"{line} {chain.summary()}"
        lines.append(line)
        if not args.json:
            print(line)

    report = enumerate_connected(filt, sink)
    if args.json:
        payload = report.to_json()
        payload["graphs"] = lines
        print(json.dumps(payload))
    else:
        print(json.dumps(report.to_json()), file=sys.stderr)
    return EXIT_OK


def _cmd_witness(args: argparse.Namespace) -> int:
    rep = witness_search(
        args.n,
        delta=args.delta,
        gamma=args.gamma,
        gamma11=args.gamma11,
        gamma11_min=args.gamma11_min,
        gamma11_max=args.gamma11_max,
        claw_free=True if args.claw_free else None,
        cograph=True if args.cograph else None,
    )
    if args.json:
        print(json.dumps(rep.to_json()))
    elif rep.witness is not None:
        print(graph6.encode(rep.witness))
        print(f"found after {rep.checked} classes", file=sys.stderr)
    else:
        print(f"none exists (exhausted {rep.checked} classes)", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    names = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        result = verify.run_suite(name, n_max=args.n_max, jobs=args.jobs)
        reports.append(result)
        if not args.json:
            print(f"{result.claim_id}: {result.verdict} ({result.scope}; {result.elapsed_s:.1f}s)")
            for entry in result.counterexamples:
                print(f"  counterexample: {json.dumps(entry)}")
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    return EXIT_REFUTED if any(r.verdict == verify.REFUTED for r in reports) else EXIT_OK


def _cmd_export_ilp(args: argparse.Namespace) -> int:
    graphs = _input_graphs(args)
    if len(graphs) != 1:
        raise ValueError("export-ilp takes exactly one graph")
    _label, g = graphs[0]
    model = ilp.ilp_model(g, args.k)
    text = ilp.write_lp(model)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    elif args.json:
        print(json.dumps({"n": model.n, "k": model.k, "lp": text}))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_certificate(args: argparse.Namespace) -> int:
    for label, g in _input_graphs(args):
        certs = find_certificates(g)
        if args.json:
            print(
                json.dumps(
                    {
                        "graph6": graph6.encode(g),
                        "certificates": [
                            {"kind": c.kind, "vertices": list(c.vertices), "bound": c.bound}
                            for c in certs
                        ],
                    }
                )
            )
        elif not certs:
            print(f"{label}: no certificates")
        else:
            for c in certs:
                path = "-".join(str(v) for v in c.vertices)
                print(f"{label}: {c.kind} {path} γ11<={c.bound}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasidom",
        description="exact quasiperfect domination: solve, generate, enumerate, verify",
    )
    parser.add_argument("--version", action="version", version=f"quasidom {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("compute", help="minimum k-quasiperfect dominating set")
    _add_graph_inputs(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_compute)

    p = subs.add_parser("chain", help="all k-quasiperfect numbers plus gamma")
    _add_graph_inputs(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_chain)

    p = subs.add_parser("gen", help="build a parameterized family member")
    p.add_argument("spec", help="family spec, e.g. clawfreeA:2,3,6")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = subs.add_parser("enumerate", help="isomorph-free connected graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int)
    p.add_argument("--gamma", type=int)
    p.add_argument("--leaves", type=int)
    p.add_argument("--max-leaves", type=int)
    p.add_argument("--claw-free", action="store_true")
    p.add_argument("--cograph", action="store_true")
    p.add_argument("--cubic", action="store_true")
    p.add_argument("--tree", action="store_true")
    p.add_argument("--chains", action="store_true", help="append chain summaries")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = subs.add_parser("witness", help="first graph matching parameters, or certified absence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int)
    p.add_argument("--gamma", type=int)
    p.add_argument("--gamma11", type=int)
    p.add_argument("--gamma11-min", type=int)
    p.add_argument("--gamma11-max", type=int)
    p.add_argument("--claw-free", action="store_true")
    p.add_argument("--cograph", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_witness)

    p = subs.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--n-max", type=int, default=verify.DEFAULT_N_MAX)
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("export-ilp", help="write the integer-program model as LP text")
    _add_graph_inputs(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_export_ilp)

    p = subs.add_parser("certificate", help="structural bounds for max-degree-3 graphs")
    _add_graph_inputs(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certificate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (graph6.Graph6Error, families.FamilySpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
