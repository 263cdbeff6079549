"""Per-slice community detection, modularity, and cross-slice linking.

Detection runs Louvain (greedy modularity optimization with multi-level
aggregation) on the simple graph aggregated from one timeslice's edges.
The implementation is deterministic for a fixed seed: node visit order is
shuffled by a seeded RNG and every tie-break falls back to index order.

Cross-slice correspondence follows the instant-optimal strategy: detect
independently per slice, then match communities of adjacent slices by
node overlap normalized by the smaller community size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .model import (
    AnalysisError,
    Community,
    CommunityKey,
    EvolutionLink,
    LinkKind,
    TemporalEdge,
    Timeslice,
)


class EmptyGraph(AnalysisError):
    """Raised when an operation needs at least one edge."""


@dataclass(frozen=True)
class SliceGraph:
    """Simple undirected graph: parallel timestamps collapsed, no loops."""

    nodes: tuple[str, ...]
    adj: tuple[tuple[int, ...], ...]  # sorted neighbor indices per node
    m: int

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "SliceGraph":
        unique = {(a, b) if a <= b else (b, a) for a, b in pairs if a != b}
        nodes = tuple(sorted({n for p in unique for n in p}))
        index = {n: i for i, n in enumerate(nodes)}
        neighbors: list[set[int]] = [set() for _ in nodes]
        for a, b in unique:
            neighbors[index[a]].add(index[b])
            neighbors[index[b]].add(index[a])
        return cls(
            nodes=nodes,
            adj=tuple(tuple(sorted(peers)) for peers in neighbors),
            m=len(unique),
        )

    @classmethod
    def from_edges(cls, edges: Iterable[TemporalEdge]) -> "SliceGraph":
        return cls.from_pairs((e.source, e.target) for e in edges)

    @property
    def n(self) -> int:
        return len(self.nodes)

    def degree(self, i: int) -> int:
        return len(self.adj[i])


def _one_level(
    adj: list[dict[int, float]],
    loops: list[float],
    m_w: float,
    rng: random.Random,
) -> tuple[list[int], bool]:
    """Local-moving phase; returns (node -> community, any move happened)."""
    n = len(adj)
    k = [sum(adj[i].values()) + 2.0 * loops[i] for i in range(n)]
    node2com = list(range(n))
    com_tot = k[:]
    improved = False
    moved = True
    while moved:
        moved = False
        order = list(range(n))
        rng.shuffle(order)
        for i in order:
            old = node2com[i]
            weights: dict[int, float] = {}
            for j, w in adj[i].items():
                c = node2com[j]
                weights[c] = weights.get(c, 0.0) + w
            com_tot[old] -= k[i]
            # scaled modularity gain of joining community c (node i removed)
            best_com = old
            best_gain = weights.get(old, 0.0) - k[i] * com_tot[old] / (2.0 * m_w)
            for c in sorted(weights):
                if c == old:
                    continue
                gain = weights[c] - k[i] * com_tot[c] / (2.0 * m_w)
                if gain > best_gain + 1e-12:
                    best_com, best_gain = c, gain
            com_tot[best_com] += k[i]
            if best_com != old:
                node2com[i] = best_com
                moved = True
                improved = True
    return node2com, improved


def _aggregate(
    adj: list[dict[int, float]],
    loops: list[float],
    node2com: list[int],
    n_coms: int,
) -> tuple[list[dict[int, float]], list[float]]:
    new_adj: list[dict[int, float]] = [{} for _ in range(n_coms)]
    new_loops = [0.0] * n_coms
    for i in range(len(adj)):
        ci = node2com[i]
        new_loops[ci] += loops[i]
        for j, w in adj[i].items():
            if j < i:
                continue
            cj = node2com[j]
            if ci == cj:
                new_loops[ci] += w
            else:
                new_adj[ci][cj] = new_adj[ci].get(cj, 0.0) + w
                new_adj[cj][ci] = new_adj[cj].get(ci, 0.0) + w
    return new_adj, new_loops


def louvain_partition(g: SliceGraph, seed: int = 0) -> dict[str, int]:
    """Full multi-level Louvain at resolution 1.0.

    Returns a total map node -> dense community id.  Modularity never
    decreases across levels because local moves are only taken on strictly
    positive gain and aggregation preserves the partition's score.
    """
    if g.m == 0:
        return {}
    rng = random.Random(seed)
    adj: list[dict[int, float]] = [{j: 1.0 for j in peers} for peers in g.adj]
    loops = [0.0] * g.n
    m_w = float(g.m)
    node2final = list(range(g.n))
    while True:
        node2com, improved = _one_level(adj, loops, m_w, rng)
        coms = sorted(set(node2com))
        remap = {c: t for t, c in enumerate(coms)}
        node2com = [remap[c] for c in node2com]
        node2final = [node2com[c] for c in node2final]
        if not improved or len(coms) == len(adj):
            break
        adj, loops = _aggregate(adj, loops, node2com, len(coms))
    return {g.nodes[i]: node2final[i] for i in range(g.n)}


def modularity(partition: dict[str, int], g: SliceGraph) -> float:
    """Newman-Girvan Q of a total partition over ``g``."""
    if g.m == 0:
        raise EmptyGraph("modularity is undefined for an edgeless graph")
    missing = [n for n in g.nodes if n not in partition]
    if missing:
        raise ValueError(f"partition not total: missing {missing[:3]}")
    m = float(g.m)
    index = {n: i for i, n in enumerate(g.nodes)}
    in_c: dict[int, int] = {}
    deg_c: dict[int, int] = {}
    for node in g.nodes:
        c = partition[node]
        deg_c[c] = deg_c.get(c, 0) + g.degree(index[node])
    for i, peers in enumerate(g.adj):
        ci = partition[g.nodes[i]]
        for j in peers:
            if j > i and partition[g.nodes[j]] == ci:
                in_c[ci] = in_c.get(ci, 0) + 1
    return sum(
        in_c.get(c, 0) / m - (deg_c[c] / (2.0 * m)) ** 2 for c in deg_c
    )


def _group_partition(partition: dict[str, int]) -> list[tuple[str, ...]]:
    """Groups ordered by (descending size, smallest member id)."""
    groups: dict[int, list[str]] = {}
    for node in sorted(partition):
        groups.setdefault(partition[node], []).append(node)
    ordered = sorted(groups.values(), key=lambda g: (-len(g), g[0]))
    return [tuple(g) for g in ordered]


def detect_slice(
    slice_: Timeslice, min_size: int = 3, seed: int = 0
) -> tuple[list[Community], Optional[float]]:
    """Detect communities in one slice; also return the partition's Q.

    Communities smaller than ``min_size`` are dropped after detection (the
    returned modularity still reflects the full partition).  Local ids are
    dense, assigned by descending size with ties broken by smallest member.
    """
    g = SliceGraph.from_edges(slice_.edges)
    if g.m == 0:
        return [], None
    partition = louvain_partition(g, seed)
    q = modularity(partition, g)

    member_lists = [grp for grp in _group_partition(partition) if len(grp) >= min_size]
    owner: dict[str, int] = {}
    for lid, members in enumerate(member_lists):
        for node in members:
            owner[node] = lid
    intra: list[list[TemporalEdge]] = [[] for _ in member_lists]
    for e in slice_.edges:
        lid = owner.get(e.source)
        if lid is not None and owner.get(e.target) == lid:
            intra[lid].append(e)
    communities = [
        Community(
            key=CommunityKey(slice_.index, lid),
            members=members,
            intra_edges=tuple(intra[lid]),
        )
        for lid, members in enumerate(member_lists)
    ]
    return communities, q


def detect_communities(
    slice_: Timeslice, min_size: int = 3, seed: int = 0
) -> list[Community]:
    return detect_slice(slice_, min_size, seed)[0]


def detect_subcommunities(c: Community, seed: int = 0) -> dict[str, int]:
    """Louvain sub-partition of one community's aggregated intra-edge graph.

    Total over the community's members; members without intra edges become
    singleton sub-communities.  Ids are dense, ordered like local ids.
    """
    g = SliceGraph.from_pairs(c.aggregated_edges)
    partition = louvain_partition(g, seed) if g.m > 0 else {}
    next_id = max(partition.values(), default=-1) + 1
    for node in c.members:
        if node not in partition:
            partition[node] = next_id
            next_id += 1
    groups = _group_partition(partition)
    return {node: sid for sid, grp in enumerate(groups) for node in grp}


def link_communities(
    prev: Sequence[Community], nxt: Sequence[Community], tau: float = 0.5
) -> list[EvolutionLink]:
    """Match communities of adjacent slices by node overlap.

    Similarity is ``|A ∩ B| / min(|A|, |B|)``; candidates need similarity
    >= tau.  Each side keeps at most its two strongest links (higher
    similarity, then larger raw overlap, then smaller local id), so splits
    and merges have fan-out two.  Link kind compares community sizes.
    """
    if not 0 < tau <= 1:
        raise ValueError(f"tau must be in (0, 1], got {tau}")
    if not prev or not nxt:
        return []

    owner: dict[str, Community] = {}
    for b in nxt:
        for node in b.members:
            owner[node] = b
    overlaps: dict[tuple[int, int], int] = {}
    for a in prev:
        for node in a.members:
            b = owner.get(node)
            if b is not None:
                pair = (a.key.local_id, b.key.local_id)
                overlaps[pair] = overlaps.get(pair, 0) + 1

    prev_by_id = {a.key.local_id: a for a in prev}
    nxt_by_id = {b.key.local_id: b for b in nxt}
    candidates: list[tuple[float, int, int, int]] = []  # (sim, overlap, a_id, b_id)
    for (a_id, b_id), ov in sorted(overlaps.items()):
        a, b = prev_by_id[a_id], nxt_by_id[b_id]
        sim = ov / min(a.size, b.size)
        if sim >= tau - 1e-12:
            candidates.append((sim, ov, a_id, b_id))

    def strongest(items, other_id_at):
        items = sorted(items, key=lambda c: (-c[0], -c[1], c[other_id_at]))
        return items[:2]

    by_from: dict[int, list] = {}
    for cand in candidates:
        by_from.setdefault(cand[2], []).append(cand)
    survivors = []
    for a_id in sorted(by_from):
        survivors.extend(strongest(by_from[a_id], other_id_at=3))

    by_to: dict[int, list] = {}
    for cand in survivors:
        by_to.setdefault(cand[3], []).append(cand)
    final = []
    for b_id in sorted(by_to):
        final.extend(strongest(by_to[b_id], other_id_at=2))

    out_degree: dict[int, int] = {}
    in_degree: dict[int, int] = {}
    for _, _, a_id, b_id in final:
        out_degree[a_id] = out_degree.get(a_id, 0) + 1
        in_degree[b_id] = in_degree.get(b_id, 0) + 1

    links = []
    for _, ov, a_id, b_id in sorted(final, key=lambda c: (c[2], c[3])):
        a, b = prev_by_id[a_id], nxt_by_id[b_id]
        if b.size > a.size:
            kind = LinkKind.GROW
        elif b.size < a.size:
            kind = LinkKind.CONTRACT
        else:
            kind = LinkKind.PRESERVE
        links.append(
            EvolutionLink(
                source=a.key,
                target=b.key,
                overlap=ov,
                kind=kind,
                split_branch=out_degree[a_id] == 2,
                merge_branch=in_degree[b_id] == 2,
            )
        )
    return links
