"""Command line front end.

Every subcommand prints one JSON document on success.  Vertices are
0-indexed everywhere; coalition and encoding sets are comma-separated
vertex lists, and --A defaults to all vertices.  Exit codes: 0 success,
1 negative verdict (e.g. the queried set cannot access), 2 usage or input
error, 3 resource limit.  Identical argv (and seed) produce byte-identical
output; randomized paths take --seed and default to seed 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import access, bounds, graphs, protocol, quantum
from .errors import (
    GraphParseError,
    InsufficientSharesError,
    NoWitnessError,
    ResourceLimitError,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _parse_set(text: str, universe: int, what: str) -> graphs.VertexSet:
    text = text.strip()
    if not text:
        return graphs.VertexSet.empty(universe)
    try:
        members = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what}: expected comma-separated integers") from None
    return graphs.VertexSet.from_iterable(universe, members)


def _load_graph(args: argparse.Namespace) -> graphs.Graph:
    if getattr(args, "family", None):
        name = args.family
        if name == "c5pow":
            if args.i is None:
                raise GraphParseError("--family c5pow requires --i")
            return graphs.c5_power(args.i)
        if args.n is None:
            raise GraphParseError(f"--family {name} requires --n")
        return graphs.family(name, args.n, p=args.p, seed=args.seed)
    if getattr(args, "graph", None):
        if args.graph == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.graph, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise GraphParseError(f"cannot read {args.graph}: {exc}") from None
        return graphs.parse_graph(text, fmt=args.format)
    raise GraphParseError("no graph given: use --graph PATH or --family NAME")


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="graph file path, or - for stdin")
    p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p.add_argument(
        "--family",
        choices=["cycle", "complete", "path", "random", "c5pow"],
        help="generate a named graph instead of reading one",
    )
    p.add_argument("--n", type=int, help="vertex count for --family")
    p.add_argument("--p", type=float, help="edge probability for --family random")
    p.add_argument("--i", type=int, help="power for --family c5pow")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized paths")


def _sets(args: argparse.Namespace, g: graphs.Graph) -> tuple[graphs.VertexSet, Optional[graphs.VertexSet]]:
    a = graphs.VertexSet.full(g.n) if args.A is None else _parse_set(args.A, g.n, "--A")
    b = None
    if getattr(args, "B", None) is not None:
        b = _parse_set(args.B, g.n, "--B")
    return a, b


def _members(s: Optional[graphs.VertexSet]) -> Optional[list[int]]:
    return None if s is None else list(s.members())


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="qss", description=__doc__.splitlines()[0])
    top.add_argument("--json", action="store_true", help="compact single-line JSON output")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classical/quantum verdict for one coalition")
    _add_graph_source(p)
    p.add_argument("--A", help="encoding set (0-indexed, comma separated); default all")
    p.add_argument("--B", required=True, help="coalition (0-indexed, comma separated)")

    p = sub.add_parser("witness", help="reconstruction witness pair for a coalition")
    _add_graph_source(p)
    p.add_argument("--A")
    p.add_argument("--B", required=True)

    p = sub.add_parser("threshold", help="smallest size at which every coalition accesses")
    _add_graph_source(p)
    p.add_argument("--A")
    p.add_argument("--limit", type=int, default=access.DEFAULT_ENUMERATION_LIMIT)

    p = sub.add_parser("product", help="threshold parameters of a scheme product")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)

    p = sub.add_parser("family", help="emit a named graph in both text formats")
    _add_graph_source(p)

    p = sub.add_parser("simulate", help="distinguishability oracle for one coalition")
    _add_graph_source(p)
    p.add_argument("--A")
    p.add_argument("--B", required=True)
    p.add_argument("--dump-state", action="store_true", help="include encoded state dumps")

    p = sub.add_parser("protocol-run", help="deal a secret and reconstruct with a coalition")
    _add_graph_source(p)
    p.add_argument("--A")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--coalition", required=True, help="player ids, comma separated")
    p.add_argument("--secret", default="0.6,0.8", help="real amplitude pair 'a,b'")

    p = sub.add_parser("bound", help="counting lower-bound arithmetic")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--min-k", action="store_true", help="smallest feasible k for --n")
    p.add_argument("--pure-qss", action="store_true", help="scan the n = 2k-1 regime")
    p.add_argument("--max-k", type=int, default=100)

    p = sub.add_parser("search", help="thresholds of every labelled graph on n vertices")
    p.add_argument("--n", type=int, required=True)

    return top


def _cmd_classify(args) -> tuple[dict, int]:
    g = _load_graph(args)
    a, b = _sets(args, g)
    report = access.access_report(g, a, b)
    doc = {
        "n": g.n,
        "A": _members(a),
        "coalition": _members(b),
        "c_verdict": report.c_verdict.value,
        "q_verdict": report.q_verdict.value,
        "rank_residual": report.rank_residual,
        "witness_D": _members(report.witnesses.d),
        "witness_C": _members(report.witnesses.c),
    }
    code = EXIT_OK if report.q_verdict is access.QVerdict.Q_ACCESSING else EXIT_NEGATIVE
    return doc, code


def _cmd_witness(args) -> tuple[dict, int]:
    g = _load_graph(args)
    a, b = _sets(args, g)
    try:
        d, c = access.reconstruction_witnesses(g, a, b)
    except NoWitnessError as exc:
        return {"n": g.n, "coalition": _members(b), "q_accessing": False, "error": str(exc)}, EXIT_NEGATIVE
    return {
        "n": g.n,
        "coalition": _members(b),
        "q_accessing": True,
        "D": _members(d),
        "C": _members(c),
    }, EXIT_OK


def _cmd_threshold(args) -> tuple[dict, int]:
    g = _load_graph(args)
    a, _ = _sets(args, g)
    report = access.qstar_threshold(g, a, limit=args.limit)
    return {
        "n": g.n,
        "A": _members(a),
        "k_star": report.k_star,
        "certificate_fail": _members(report.certificate_fail),
        "sets_checked": report.sets_checked,
    }, EXIT_OK


def _cmd_product(args) -> tuple[dict, int]:
    n, k = access.product_threshold_bound(args.n1, args.k1, args.n2, args.k2)
    return {"n1": args.n1, "k1": args.k1, "n2": args.n2, "k2": args.k2, "n": n, "k": k}, EXIT_OK


def _cmd_family(args) -> tuple[dict, int]:
    g = _load_graph(args)
    return {
        "n": g.n,
        "edge_count": g.edge_count(),
        "edgelist": graphs.serialize_graph(g, "edgelist"),
        "graph6": graphs.serialize_graph(g, "graph6"),
    }, EXIT_OK


def _cmd_simulate(args) -> tuple[dict, int]:
    g = _load_graph(args)
    a, b = _sets(args, g)
    ov, dist = quantum.distinguishability(g, a, b)
    if ov < quantum.ATOL_ZERO_TEST:
        verdict = "Accessing"
    elif dist < quantum.ATOL_ZERO_TEST:
        verdict = "Blind"
    else:
        verdict = "Partial"
    doc = {
        "n": g.n,
        "A": _members(a),
        "B": _members(b),
        "overlap": ov,
        "trace_distance": dist,
        "oracle_verdict": verdict,
    }
    if args.dump_state:
        doc["state_0"] = quantum.dump_state(quantum.encode_classical(g, a, 0))
        doc["state_1"] = quantum.dump_state(quantum.encode_classical(g, a, 1))
    return doc, EXIT_OK if verdict == "Accessing" else EXIT_NEGATIVE


def _cmd_protocol_run(args) -> tuple[dict, int]:
    g = _load_graph(args)
    a, _ = _sets(args, g)
    try:
        sa, sb = (float(tok) for tok in args.secret.split(","))
    except ValueError:
        raise GraphParseError("--secret expects two comma-separated reals") from None
    cfg = protocol.ProtocolConfig(g, a, args.k, c=args.c, seed=args.seed)
    coalition = [int(tok) for tok in args.coalition.split(",")]
    t = protocol.deal(cfg, (sa, sb))
    try:
        rec = protocol.reconstruct(t, coalition)
    except (InsufficientSharesError, NoWitnessError) as exc:
        doc = protocol.serialize_transcript(t)
        doc["coalition"] = sorted(set(coalition))
        doc["error"] = str(exc)
        return doc, EXIT_NEGATIVE
    doc = protocol.serialize_transcript(t, rec)
    doc["coalition"] = sorted(set(coalition))
    ok = rec.fidelity >= 1.0 - protocol.FIDELITY_ATOL
    return doc, EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_bound(args) -> tuple[dict, int]:
    if args.pure_qss:
        report = bounds.pure_qss_feasibility(args.max_k)
        return {
            "rows": [list(r) for r in report.rows],
            "largest_holding_n": report.largest_holding_n,
            "smallest_failing_n": report.smallest_failing_n,
            "chain_k_max": report.chain_k_max,
            "chain_n_max": report.chain_n_max,
            "stated_cutoff_n": report.stated_cutoff_n,
            "scan_matches_chain": report.scan_matches_chain,
        }, EXIT_OK
    if args.min_k:
        if args.n is None:
            raise GraphParseError("--min-k requires --n")
        k = bounds.min_feasible_k(args.n)
        return {"n": args.n, "min_feasible_k": k, "ratio": k / args.n}, EXIT_OK
    if args.n is None or args.k is None:
        raise GraphParseError("bound requires --n and --k (or --min-k / --pure-qss)")
    report = bounds.counting_inequality(args.n, args.k)
    doc = {
        "n": report.n,
        "k": report.k,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "holds": report.holds,
    }
    return doc, EXIT_OK if report.holds else EXIT_NEGATIVE


def _cmd_search(args) -> tuple[dict, int]:
    table = access.exhaustive_graph_search(args.n)
    histogram: dict[int, int] = {}
    for _, k_star in table:
        histogram[k_star] = histogram.get(k_star, 0) + 1
    min_k = min(histogram)
    attainers = [graphs.serialize_graph(g, "graph6") for g, k in table if k == min_k]
    return {
        "n": args.n,
        "graphs": len(table),
        "min_k_star": min_k,
        "k_star_histogram": {str(k): v for k, v in sorted(histogram.items())},
        "attainer_count": len(attainers),
        "attainers_graph6": attainers,
    }, EXIT_OK


_HANDLERS = {
    "classify": _cmd_classify,
    "witness": _cmd_witness,
    "threshold": _cmd_threshold,
    "product": _cmd_product,
    "family": _cmd_family,
    "simulate": _cmd_simulate,
    "protocol-run": _cmd_protocol_run,
    "bound": _cmd_bound,
    "search": _cmd_search,
}


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        doc, code = _HANDLERS[args.command](args)
    except (GraphParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.json:
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    else:
        print(json.dumps(doc, sort_keys=True, indent=2))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
