"""Command line interface.

Machine-readable JSON goes to stdout, human summaries to stderr.  Exit codes:
0 success, 1 validation failure or oracle mismatch, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions
from .bruteforce import oracle_suite
from .embedding import BookEmbedding, validate_embedding
from .errors import BookEmbedError
from .graph import Graph, complete_graph, is_k_tree
from .heuristics import embed_ktree, first_fit_pages
from .solver import SolverOptions, book_thickness_exact
from .treedec import TreeDecomposition, decomposition_from_certificate, validate_decomposition


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load_graph(path: str) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return Graph.from_json(text)
    return Graph.from_text(text)


# ---- gen ----


def _cmd_gen(args: argparse.Namespace) -> int:
    fam = args.family
    need = {
        "complete": ("n",), "complete-bipartite": ("k", "m"), "split": ("k", "m"),
        "q": ("k",), "path-power": ("n", "k"), "dujwoo": ("k", "m"),
        "random-ktree": ("n", "k"),
    }[fam]
    for p in need:
        if getattr(args, p) is None:
            _say(f"gen --family {fam} requires --{p}")
            return 2

    decomposition: TreeDecomposition | None = None
    if fam == "complete":
        g = complete_graph(args.n)
    elif fam == "complete-bipartite":
        g = constructions.complete_bipartite(args.k, args.m)
    elif fam == "split":
        g = constructions.complete_split(args.k, args.m)
    elif fam == "q":
        art = constructions.build_q(args.k, args.n)
        g, decomposition = art.graph, art.decomposition
    elif fam == "path-power":
        g = constructions.path_power(args.n, args.k)
    elif fam == "dujwoo":
        g = constructions.dujwoo_gadget(args.k, args.m)
    else:
        g, cert = constructions.random_ktree(args.n, args.k, args.seed)
        decomposition = decomposition_from_certificate(cert)

    want_td = args.with_treedec
    if want_td and decomposition is None:
        cert = is_k_tree(g, args.k) if args.k else None
        if cert is None:
            _say(f"--with-treedec is not available for family {fam}")
            return 2
        decomposition = decomposition_from_certificate(cert)

    if args.format == "text":
        if want_td:
            _say("--with-treedec requires JSON output")
            return 2
        sys.stdout.write(g.to_text())
    elif want_td:
        _emit({"graph": g.to_json_dict(), "decomposition": decomposition.to_json_dict()})
    else:
        _emit(g.to_json_dict())
    _say(f"generated {fam}: {g.n} vertices, {g.m} edges")
    return 0


# ---- bt ----


def _cmd_bt(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    opts = SolverOptions(
        max_pages=args.max_pages,
        time_budget=args.time_budget,
        node_limit=args.node_limit,
        threads=args.threads,
    )
    report = book_thickness_exact(g, opts)
    _emit(report.to_json_dict())
    if args.witness and report.witness is not None:
        Path(args.witness).write_text(report.witness.to_json())
        _say(f"witness written to {args.witness}")
    _say(
        f"status {report.status.value}: book thickness {report.book_thickness} "
        f"(lower bound {report.lower_bound}), {report.nodes_explored} nodes "
        f"in {report.elapsed:.3f}s"
    )
    return 0


# ---- embed ----


def _infer_certificate(g: Graph, k: int | None):
    if k is not None:
        return is_k_tree(g, k)
    # try only widths whose edge-count identity matches
    for kk in range(1, g.n):
        if kk * g.n - kk * (kk + 1) // 2 == g.m:
            cert = is_k_tree(g, kk)
            if cert is not None:
                return cert
    return None


def _cmd_embed(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.method == "ktree":
        cert = _infer_certificate(g, args.k)
        if cert is None:
            _say("graph is not a k-tree for the requested (or any matching) k")
            return 1
        emb = embed_ktree(g, cert)
    else:
        if args.order:
            order = json.loads(Path(args.order).read_text())
        else:
            order = list(range(g.n))
        emb = first_fit_pages(g, order)
    _emit(emb.to_json_dict())
    _say(f"embedding uses {emb.pages_used()} pages")
    return 0


# ---- check ----


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    emb = BookEmbedding.from_json(Path(args.embedding).read_text())
    result = validate_embedding(g, emb)
    _emit(result.to_json_dict())
    _say("embedding is valid" if result.ok else "embedding is INVALID")
    return 0 if result.ok else 1


# ---- treedec validate ----


def _cmd_treedec_validate(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    td = TreeDecomposition.from_json(Path(args.treedec).read_text())
    report = validate_decomposition(g, td)
    _emit(report.to_json_dict())
    _say(
        f"decomposition {'valid' if report.valid else 'INVALID'}, "
        f"width {report.width}, smooth {report.smooth}, max degree {report.max_degree}"
    )
    return 0 if report.valid else 1


# ---- oracle ----


def _cmd_oracle(args: argparse.Namespace) -> int:
    summary = oracle_suite(max_n=args.max_n, samples=args.samples, seed=args.seed)
    _emit(summary)
    _say(
        f"solver vs brute force on {summary['bt_checked']} graphs, "
        f"recognizer vs definition on {summary['ktree_checked']} cases: "
        + ("all agree" if summary["ok"] else "MISMATCH")
    )
    return 0 if summary["ok"] else 1


# ---- parser ----


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bookembed",
        description="Book embeddings of k-trees: generate, solve, embed, check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family member")
    p.add_argument("--family", required=True, choices=[
        "complete", "split", "q", "path-power", "dujwoo", "complete-bipartite",
        "random-ktree",
    ])
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--with-treedec", action="store_true")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bt", help="exact book thickness of a small graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-pages", type=int)
    p.add_argument("--time-budget", type=float)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--witness", help="write the witness embedding JSON here")
    p.set_defaults(func=_cmd_bt)

    p = sub.add_parser("embed", help="heuristic embedding")
    p.add_argument("--graph", required=True)
    p.add_argument("--method", choices=["ktree", "first-fit"], default="ktree")
    p.add_argument("--k", type=int)
    p.add_argument("--order", help="JSON file with a circular order (first-fit)")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("check", help="validate an embedding against its graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--embedding", required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("treedec", help="tree decomposition tools")
    tsub = p.add_subparsers(dest="treedec_command", required=True)
    pv = tsub.add_parser("validate", help="validate a decomposition against a graph")
    pv.add_argument("--graph", required=True)
    pv.add_argument("--treedec", required=True)
    pv.set_defaults(func=_cmd_treedec_validate)

    p = sub.add_parser("oracle", help="cross-check fast paths against brute force")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BookEmbedError as exc:
        _say(f"error: {exc}")
        return 2
    except OSError as exc:
        _say(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
