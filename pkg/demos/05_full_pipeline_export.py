"""Run the whole pipeline on a generated log and write the export JSON.

Also prints the equivalent command-line invocation; add --serve to that
command to browse the same analysis over HTTP.

    python3 demos/05_full_pipeline_export.py
"""

import json
import random
import tempfile
import time
from pathlib import Path

from temponet.model import build_network
from temponet.pipeline import AnalysisConfig, export_json, run_pipeline


def generate_log(path: Path) -> None:
    """Three drifting friend groups over 300 timestamps, plus noise."""
    rng = random.Random(17)
    groups = [[f"g{gi}n{i}" for i in range(8)] for gi in range(3)]
    lines = []
    for t in range(1, 301):
        for gi, grp in enumerate(groups):
            if (t // 100) % 3 == gi:
                continue  # each group goes quiet for one 100-timestamp era
            for _ in range(3):
                a, b = rng.sample(grp, 2)
                lines.append(f"{a}\t{b}\t{t}")
        if rng.random() < 0.1:
            a = rng.choice(groups[0])
            b = rng.choice(groups[1])
            lines.append(f"{a}\t{b}\t{t}")
    path.write_text("\n".join(lines) + "\n")


def main() -> None:
    out_dir = Path(tempfile.mkdtemp(prefix="temponet_demo_"))
    edges_path = out_dir / "friends.tsv"
    generate_log(edges_path)

    rows = [
        tuple(line.split("\t")[:2]) + (int(line.split("\t")[2]),)
        for line in edges_path.read_text().splitlines()
    ]
    net = build_network(rows)

    config = AnalysisConfig(slice_count=6, min_community_size=3, seed=1)
    progress: dict = {}
    started = time.perf_counter()
    result = run_pipeline(net, config, progress=progress)
    elapsed = time.perf_counter() - started

    print(f"pipeline finished in {elapsed:.2f}s (last stage: {progress['stage']})")
    print(f"  slices: {len(result.slices)}, communities: "
          f"{len(result.communities)}, links: {len(result.links)}")
    print(f"  mean modularity: {result.mean_modularity:.3f}")
    for idx in sorted(result.by_slice):
        sizes = [c.size for c in result.by_slice[idx]]
        print(f"  slice {idx}: {len(sizes)} communities, sizes {sizes}")

    export_path = out_dir / "analysis.json"
    export_path.write_text(export_json(result))
    doc = json.loads(export_path.read_text())
    print(f"\nwrote {export_path} ({export_path.stat().st_size} bytes)")
    print(f"  format: {doc['format']} v{doc['version']}; "
          f"top-level keys: {', '.join(sorted(doc))}")

    print("\nsame run via the command line:")
    print(f"  temponet --edges {edges_path} --timeslices 6 --seed 1 "
          f"--out {export_path}")


if __name__ == "__main__":
    main()
