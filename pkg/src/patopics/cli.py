"""Command line entry points: build, serve, compare, stats."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import api as api_mod
from . import correlation, factorization
from .pipeline import BuildError, PipelineConfig, build
from .store import ModelStore, StoreError


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patopics",
        description="Patent corpus topic modeling and analytics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="run the full pipeline and persist a model store")
    p_build.add_argument("--input", required=True, type=Path, help="patent JSONL file")
    p_build.add_argument("--embeddings", required=True, type=Path, help="word vector text file")
    p_build.add_argument("--stoplist", type=Path, default=None,
                         help="stopword file (default: bundled SMART list)")
    p_build.add_argument("--topics", type=int, default=30)
    p_build.add_argument("--top-words", type=int, default=30)
    p_build.add_argument("--min-token-len", type=int, default=3)
    p_build.add_argument("--min-df", type=int, default=2)
    p_build.add_argument("--max-df-ratio", type=float, default=0.95)
    p_build.add_argument("--phrase-threshold", type=float, default=0.5)
    p_build.add_argument("--phrase-min-count", type=int, default=5)
    p_build.add_argument("--neighbors", type=int, default=100)
    p_build.add_argument("--alpha", type=float, default=0.4)
    p_build.add_argument("--max-iter", type=int, default=500)
    p_build.add_argument("--tol", type=float, default=1e-6)
    p_build.add_argument("--seed", type=int, default=42)
    p_build.add_argument("--out", required=True, type=Path, help="store output directory")

    p_serve = sub.add_parser("serve", help="serve a model store over HTTP")
    p_serve.add_argument("--model", required=True, type=Path, help="store directory")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--auth", type=Path, default=None,
                         help="JSON credentials file enabling title edits")
    p_serve.add_argument("--ui", type=Path, default=None,
                         help="directory with the built web explorer, served at /")

    p_compare = sub.add_parser("compare", help="topic intersection of two or more patents")
    p_compare.add_argument("--model", required=True, type=Path)
    p_compare.add_argument("--ids", required=True, help="comma separated patent ids")
    p_compare.add_argument("--threshold", type=float, default=0.05)

    p_stats = sub.add_parser("stats", help="print the dashboard statistics of a store")
    p_stats.add_argument("--model", required=True, type=Path)

    return parser


def _cmd_build(args: argparse.Namespace) -> int:
    config = PipelineConfig(
        input_path=args.input,
        embeddings_path=args.embeddings,
        output_dir=args.out,
        stoplist_path=args.stoplist,
        n_topics=args.topics,
        top_words=args.top_words,
        min_token_len=args.min_token_len,
        min_df=args.min_df,
        max_df_ratio=args.max_df_ratio,
        phrase_min_count=args.phrase_min_count,
        phrase_threshold=args.phrase_threshold,
        neighbors=args.neighbors,
        alpha=args.alpha,
        max_iter=args.max_iter,
        tol=args.tol,
        seed=args.seed,
    )
    try:
        result = build(config)
    except BuildError as exc:
        print(json.dumps({"error": str(exc), "stage": exc.stage}), file=sys.stderr)
        return 1
    model = result.model
    print(
        json.dumps(
            {
                "store": str(result.store.directory),
                "documents": model.n_docs,
                "terms": model.n_terms,
                "topics": model.k,
                "iterations": model.iterations_run,
                "objective": model.objective_trace[-1],
            }
        )
    )
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    api_mod.serve(args.model, port=args.port, auth_path=args.auth, host=args.host,
                  ui_dir=args.ui)
    return 0


def _load_snapshot(model_dir: Path) -> api_mod.Snapshot:
    return api_mod.load_snapshot(ModelStore(model_dir))


def _cmd_compare(args: argparse.Namespace) -> int:
    snap = _load_snapshot(args.model)
    wanted = [x.strip() for x in args.ids.split(",") if x.strip()]
    missing = [pid for pid in wanted if pid not in snap.by_id]
    if missing:
        print(json.dumps({"error": f"unknown patent ids: {missing}"}), file=sys.stderr)
        return 1
    distributions = [
        factorization.topic_distribution(snap.model, snap.row_of[pid]) for pid in wanted
    ]
    result = correlation.compare_patents(distributions, args.threshold)
    print(
        json.dumps(
            {
                "patent_ids": list(result.patent_ids),
                "threshold": args.threshold,
                "shared_topics": sorted(result.shared_topics),
                "pairwise_shared": [
                    {"pair": list(pair), "topics": sorted(topics)}
                    for pair, topics in sorted(result.pairwise_shared.items())
                ],
            },
            indent=2,
        )
    )
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    store = ModelStore(args.model)
    print(json.dumps(store.load_stats(), indent=2, sort_keys=True))
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "build": _cmd_build,
        "serve": _cmd_serve,
        "compare": _cmd_compare,
        "stats": _cmd_stats,
    }
    try:
        return handlers[args.command](args)
    except (StoreError, ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
