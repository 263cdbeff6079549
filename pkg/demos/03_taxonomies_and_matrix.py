"""Classify communities by structure and temporal behavior, cross-tabulate.

    python3 demos/03_taxonomies_and_matrix.py
"""

import itertools

from temponet.model import (
    AnalysisResult,
    Community,
    CommunityKey,
    TemporalEdge,
    Timeslice,
)
from temponet.pipeline import AnalysisConfig, matrix_payload, run_pipeline
from temponet.model import build_network
from temponet.taxonomy import classify_structural, classify_temporal


def community(pairs, timestamps=None):
    ts = timestamps or [1] * len(pairs)
    edges = tuple(TemporalEdge(*sorted(p), t) for p, t in zip(pairs, ts))
    members = tuple(sorted({n for p in pairs for n in p}))
    return Community(key=CommunityKey(1, 0), members=members, intra_edges=edges)


def show_structural() -> None:
    names = [f"v{i}" for i in range(12)]
    shapes = {
        "triangle": list(itertools.combinations(names[:3], 2)),
        "5-clique": list(itertools.combinations(names[:5], 2)),
        "12-cycle": [(names[i], names[(i + 1) % 12]) for i in range(12)],
        "hub plus 6 leaves": [("hub", leaf) for leaf in names[:6]],
        "path of 8": [(names[i], names[i + 1]) for i in range(7)],
        "two separate pairs": [("p0", "p1"), ("q0", "q1")],
    }
    print("structural classification:")
    for desc, pairs in shapes.items():
        cat = classify_structural(community(pairs))
        print(f"  {desc:20s} -> {cat.label}")


def show_temporal() -> None:
    sl = Timeslice(index=1, t_start=10, t_end=19, edges=())
    cases = {
        "one edge every timestamp": list(range(10, 20)),
        "burst at t=12..14 only": [12] * 5 + [13] * 5 + [14] * 5,
        "edges at t=10, 15, 19": [10, 15, 19],
        "every timestamp, heavy center": list(range(10, 20)) + [14] * 40 + [15] * 40,
    }
    print("\ntemporal classification over slice [10, 19]:")
    for desc, stamps in cases.items():
        pairs = [(f"x{i}", f"y{i}") for i in range(len(stamps))]
        cat = classify_temporal(community(pairs, stamps), sl)
        print(f"  {desc:28s} -> {cat.label}")


def show_matrix() -> None:
    rows = []
    for t in range(1, 21):
        rows += [(a, b, t) for a, b in itertools.combinations("abcde", 2)]
    for t in range(1, 11):
        rows += [("hub", leaf, t) for leaf in ("p", "q", "r", "s")]
    for t in (3, 4, 14):
        rows += [("m", "n", t), ("n", "o", t), ("o", "m", t)]
    net = build_network(rows)
    result: AnalysisResult = run_pipeline(net, AnalysisConfig(slice_count=2))

    payload = matrix_payload(result, "structural", "temporal")
    print("\nstructural x temporal matrix over", len(result.communities),
          "communities:")
    width = max(len(label) for label in payload["y_labels"]) + 2
    print(" " * width + "  ".join(f"{x:>10s}" for x in payload["x_labels"]))
    for label, counts in zip(payload["y_labels"], payload["counts"]):
        print(f"{label:<{width}s}" + "  ".join(f"{c:>10d}" for c in counts))


def main() -> None:
    show_structural()
    show_temporal()
    show_matrix()


if __name__ == "__main__":
    main()
