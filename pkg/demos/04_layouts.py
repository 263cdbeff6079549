"""View geometry: global grid, spring layout, supernodes, activity raster.

    python3 demos/04_layouts.py
"""

import itertools

from temponet.community import detect_slice, link_communities
from temponet.layout import (
    build_supergraph,
    community_positions,
    global_grid_positions,
    tam_rows,
)
from temponet.model import (
    Community,
    CommunityKey,
    TemporalEdge,
    Timeslice,
    build_network,
)
from temponet.slicing import uniform_slices


def split_merge_network():
    """Same story as demo 02: stable team, a two-way split that remerges."""
    rows = []
    team_a = [f"a{i}" for i in range(4)]
    team_b = [f"b{i}" for i in range(6)]
    for t in range(1, 31):
        rows += [(x, y, t) for x, y in itertools.combinations(team_a, 2)]
    for t in list(range(1, 11)) + list(range(21, 31)):
        rows += [(x, y, t) for x, y in itertools.combinations(team_b, 2)]
    for t in range(11, 21):
        rows += [(x, y, t) for x, y in itertools.combinations(team_b[:3], 2)]
        rows += [(x, y, t) for x, y in itertools.combinations(team_b[3:], 2)]
    return build_network(rows)


def show_grid() -> None:
    net = split_merge_network()
    slices = uniform_slices(net, 3)
    by_slice = {sl.index: detect_slice(sl)[0] for sl in slices}
    links = []
    for i in range(1, len(slices)):
        links += link_communities(by_slice[i], by_slice[i + 1])

    grid = global_grid_positions(by_slice, links)
    print(f"grid layout: {len(grid.columns)} columns, capacity {grid.capacity}, "
          f"total link length {grid.total_length():.3f}")
    cells = {}
    for key, row in grid.rows.items():
        cells[(row, key.slice_index)] = f"({key.slice_index},{key.local_id})"
    for row in range(grid.capacity):
        line = "".join(f"{cells.get((row, col), '.'):>8s}" for col in grid.columns)
        print("   " + line)
    for link in grid.links:
        print(f"   link row {link.source_row} -> row {link.target_row}: "
              f"{link.event} (overlap {link.overlap})")


def barbell_community() -> Community:
    pairs = (
        list(itertools.combinations("abcd", 2))
        + list(itertools.combinations("wxyz", 2))
        + [("d", "w")]
    )
    edges = tuple(TemporalEdge(*sorted(p), 1) for p in pairs)
    members = tuple(sorted({n for p in pairs for n in p}))
    return Community(key=CommunityKey(1, 0), members=members, intra_edges=edges)


def show_spring() -> None:
    c = barbell_community()
    pos = community_positions(c, seed=4)
    members = c.members
    print("\nspring layout of two 4-cliques joined by one edge:")
    for node in members:
        x, y = pos[node]
        print(f"   {node}: ({x:.3f}, {y:.3f})")
    left = [pos[n] for n in "abcd"]
    right = [pos[n] for n in "wxyz"]
    cx = sum(x for x, _ in left) / 4, sum(y for _, y in left) / 4
    cy = sum(x for x, _ in right) / 4, sum(y for _, y in right) / 4
    gap = ((cx[0] - cy[0]) ** 2 + (cx[1] - cy[1]) ** 2) ** 0.5
    print(f"   clique centroids sit {gap:.3f} apart in the unit square")


def show_supernodes() -> None:
    labels = {n: "left" for n in "abcd"} | {n: "right" for n in "wxyz"}
    graph = build_supergraph(barbell_community(), labels)
    print("\nsupernode condensation of the barbell:")
    for sn in graph.supernodes:
        print(f"   supernode {sn.sub_id}: {sn.size} members "
              f"({', '.join(sn.members)}), label {sn.label}")
    for se in graph.superedges:
        print(f"   superedge {se.source} -- {se.target}, weight {se.weight}")


def show_tam() -> None:
    schedule = {
        ("a", "b"): [1, 2, 3, 4],
        ("b", "c"): [3, 4, 5, 6],
        ("c", "d"): [8, 9, 10],
        ("d", "e"): [2, 9],
        ("a", "c"): [4],
    }
    edges = tuple(
        TemporalEdge(x, y, t) for (x, y), ts in schedule.items() for t in ts
    )
    c = Community(key=CommunityKey(1, 0), members=tuple("abcde"), intra_edges=edges)
    sl = Timeslice(index=1, t_start=1, t_end=10, edges=edges)
    data = tam_rows(c, sl, {"a": "day", "b": "day", "d": "night", "e": "night"})
    print(f"\nactivity raster, slice [{data.t_start}, {data.t_end}] "
          "(rows grouped by label):")
    for row in data.rows:
        marks = "".join(
            "#" if t in row.active else "." for t in range(data.t_start, data.t_end + 1)
        )
        print(f"   {row.node:>2s} [{str(row.label):>5s}] {marks}")
    print(f"   edges per timestamp: {' '.join(str(n) for n in data.edge_series)}")


def main() -> None:
    show_grid()
    show_spring()
    show_supernodes()
    show_tam()


if __name__ == "__main__":
    main()
