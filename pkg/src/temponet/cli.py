"""Batch front-end: run the analysis headlessly and export or serve it.

Exit codes: 0 success, 1 input/ingest failure, 2 invalid flags or config.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Optional

from .ingest import IngestOptions, NoValidEdges, ParseReport, parse_edge_list, parse_metadata
from .model import AnalysisError, EmptyNetwork, build_network
from .pipeline import AnalysisConfig, ConfigError, export_json, run_pipeline
from .sampling import apply_sampling, parse_sampling_spec
from .slicing import suggest_slice_counts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="temponet",
        description=(
            "Analyze a timestamped edge list: uniform timeslicing, per-slice "
            "community detection, cross-slice evolution linking, and "
            "structural/temporal classification."
        ),
    )
    parser.add_argument("--edges", required=True, help="edge list file: source target timestamp")
    parser.add_argument("--metadata", help="optional node label file: node label")
    parser.add_argument(
        "--timeslices",
        type=int,
        help="number of uniform timeslices (default: the suggested count)",
    )
    parser.add_argument(
        "--min-community-size",
        type=int,
        default=3,
        metavar="N",
        help="drop communities smaller than N nodes (default 3)",
    )
    parser.add_argument(
        "--sampling",
        default="none",
        help="none | node:FRACTION | edge:FRACTION | snowball:seeds=K,waves=W",
    )
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    parser.add_argument(
        "--tau",
        type=float,
        default=0.5,
        help="minimum overlap similarity for evolution links (default 0.5)",
    )
    parser.add_argument("--out", help="write the analysis JSON here (default: stdout)")
    parser.add_argument(
        "--suggest-only",
        action="store_true",
        help="print suggested timeslice counts and exit",
    )
    parser.add_argument("--serve", action="store_true", help="start the HTTP server pre-loaded with the result")
    parser.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("TEMPONET_PORT", "8000")),
        help="server port for --serve (default $TEMPONET_PORT or 8000)",
    )
    return parser


def _fail(message: str, code: int) -> int:
    print(f"temponet: {message}", file=sys.stderr)
    return code


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        sampling = parse_sampling_spec(args.sampling, args.seed)
    except ValueError as exc:
        return _fail(str(exc), 2)

    try:
        raw = Path(args.edges).read_bytes()
    except OSError as exc:
        return _fail(f"cannot read edge file: {exc}", 1)
    report = ParseReport()
    try:
        edges = parse_edge_list(raw, IngestOptions(), report)
        metadata = None
        if args.metadata:
            metadata = parse_metadata(Path(args.metadata).read_bytes(), report)
        net = build_network(edges, metadata)
    except OSError as exc:
        return _fail(f"cannot read metadata file: {exc}", 1)
    except (NoValidEdges, EmptyNetwork) as exc:
        return _fail(str(exc), 1)
    if report.bad_lines:
        shown = ", ".join(str(n) for n, _ in report.bad_lines[:10])
        print(
            f"temponet: skipped {len(report.bad_lines)} bad line(s): {shown}",
            file=sys.stderr,
        )

    try:
        sampled = apply_sampling(net, sampling)
    except AnalysisError as exc:
        return _fail(str(exc), 1)
    suggestion = suggest_slice_counts(sampled)
    if args.suggest_only:
        print(json.dumps(suggestion.to_dict(), sort_keys=True))
        return 0

    slice_count = args.timeslices if args.timeslices is not None else suggestion.default_count
    try:
        config = AnalysisConfig(
            slice_count=slice_count,
            min_community_size=args.min_community_size,
            sampling=sampling,
            seed=args.seed,
            tau=args.tau,
        )
    except ConfigError as exc:
        return _fail(str(exc), 2)

    start = time.perf_counter()
    try:
        result = run_pipeline(net, config)
    except AnalysisError as exc:
        return _fail(str(exc), 1)
    wall = time.perf_counter() - start

    text = export_json(result) + "\n"
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            return _fail(f"cannot write output: {exc}", 1)
    else:
        sys.stdout.write(text)
    print(
        f"temponet: {len(result.communities)} communities, "
        f"mean modularity {result.mean_modularity:.4f}, {wall:.2f}s",
        file=sys.stderr,
    )

    if args.serve:
        from .server import serve_preloaded

        serve_preloaded(result, port=args.port)
    return 0


if __name__ == "__main__":
    sys.exit(main())
