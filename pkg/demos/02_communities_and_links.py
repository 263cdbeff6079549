"""Detect per-slice communities, link them across slices, classify events.

The synthetic story: team A persists through all three phases; team B
splits into two halves in phase 2, and the halves merge back in phase 3;
a transient group exists only in phase 2.

    python3 demos/02_communities_and_links.py
"""

import itertools
import random

from temponet.community import detect_slice, link_communities
from temponet.model import build_network
from temponet.slicing import uniform_slices
from temponet.taxonomy import classify_evolution

TEAM_A = [f"a{i}" for i in range(5)]
TEAM_B = [f"b{i}" for i in range(6)]
TRANSIENT = ["t0", "t1", "t2"]


def clique_rows(nodes, timestamps, rng, per_stamp=2):
    rows = []
    pairs = list(itertools.combinations(nodes, 2))
    for t in timestamps:
        for a, b in rng.sample(pairs, min(per_stamp, len(pairs))):
            rows.append((a, b, t))
    return rows


def main() -> None:
    rng = random.Random(3)
    phase1, phase2, phase3 = range(1, 11), range(11, 21), range(21, 31)
    rows = []
    for phase in (phase1, phase2, phase3):
        rows += clique_rows(TEAM_A, phase, rng, per_stamp=3)
    rows += clique_rows(TEAM_B, phase1, rng, per_stamp=3)
    rows += clique_rows(TEAM_B[:3], phase2, rng)   # the split halves
    rows += clique_rows(TEAM_B[3:], phase2, rng)
    rows += clique_rows(TEAM_B, phase3, rng, per_stamp=3)
    rows += clique_rows(TRANSIENT, phase2, rng)

    net = build_network(rows)
    slices = uniform_slices(net, 3)

    by_slice = {}
    for sl in slices:
        found, q = detect_slice(sl, min_size=3, seed=0)
        by_slice[sl.index] = found
        print(f"slice {sl.index} [{sl.t_start}, {sl.t_end}]: Q={q:.3f}")
        for c in found:
            print(f"  ({c.key.slice_index},{c.key.local_id}) "
                  f"size {c.size}: {', '.join(c.members)}")

    links = []
    for i in range(1, len(slices)):
        links += link_communities(by_slice[i], by_slice[i + 1])
    print("\nlinks between adjacent slices:")
    for link in links:
        kc = link.source, link.target
        print(f"  ({kc[0].slice_index},{kc[0].local_id}) -> "
              f"({kc[1].slice_index},{kc[1].local_id})  "
              f"overlap {link.overlap}  {link.event_label}")

    communities = [c for found in by_slice.values() for c in found]
    events = classify_evolution(links, communities)
    print("\nevolution events per community:")
    for c in communities:
        names = sorted(ev.value for ev in events[c.key])
        print(f"  ({c.key.slice_index},{c.key.local_id}): {', '.join(names)}")


if __name__ == "__main__":
    main()
