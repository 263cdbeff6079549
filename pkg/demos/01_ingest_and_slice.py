"""Parse a messy edge list, inspect the network, and slice its timeline.

Run from the repository root:

    python3 demos/01_ingest_and_slice.py
"""

from temponet.ingest import IngestOptions, ParseReport, parse_edge_list, parse_metadata
from temponet.model import build_network, network_summary
from temponet.slicing import suggest_slice_counts, uniform_slices

RAW = """\
# contact log, whitespace separated: source target timestamp
alice bob 1
alice carol 2
bob carol 2
bob carol 2
carol carol 3
dave erin 5
broken line without timestamp
erin frank 6
dave frank 6
alice bob 9
frank dave 10
"""

LABELS = """\
alice\tsales
bob\tsales
carol\tsales
dave\tops
erin\tops
frank\tops
ghost\tops
"""


def main() -> None:
    report = ParseReport()
    edges = parse_edge_list(RAW, IngestOptions(), report)
    print(f"parsed {len(edges)} edges")
    for lineno, reason in report.bad_lines:
        print(f"  skipped line {lineno}: {reason}")

    net = build_network(edges, metadata=parse_metadata(LABELS))
    print(f"dropped {net.self_loops_dropped} self-loop(s), collapsed "
          f"{net.duplicates_collapsed} duplicate(s), discarded metadata for "
          f"{sorted(net.metadata_dropped)}")

    s = network_summary(net)
    print(f"\nnetwork: {s.node_count} nodes, {s.edge_count} edges, "
          f"t in [{net.t_min}, {net.t_max}] (span {net.span}), "
          f"{s.active_timestamp_count} active timestamps")

    hint = suggest_slice_counts(net)
    print(f"suggested slice counts: min={hint.min_count} "
          f"default={hint.default_count} max={hint.max_count}")

    for k in (2, hint.default_count):
        print(f"\nuniform slicing with k={k}:")
        for sl in uniform_slices(net, k):
            stamps = sorted({e.timestamp for e in sl.edges})
            print(f"  slice {sl.index}: [{sl.t_start}, {sl.t_end}] "
                  f"{len(sl.edges)} edges at t={stamps}")


if __name__ == "__main__":
    main()
