"""Per-node and per-community numeric details for the info panel.

All metrics are computed on the community's aggregated intra-edge graph
for the slice under analysis.  Betweenness is approximated by sampling a
quarter of the nodes as shortest-path sources (Brandes accumulation per
source, rescaled); degree and closeness are exact and normalized to
[0, 1].
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .model import AnalysisError, Community, Timeslice


class NodeNotInCommunity(AnalysisError):
    """Raised when asking for details of a node outside the community."""


@dataclass(frozen=True)
class NodeDetails:
    node: str
    label: Optional[str]
    degree: float  # deg / (n - 1)
    closeness: float
    betweenness: float  # approximate, normalized

    def to_dict(self) -> dict:
        return {
            "node": self.node,
            "label": self.label,
            "degree": round(self.degree, 4),
            "closeness": round(self.closeness, 4),
            "betweenness": round(self.betweenness, 4),
        }


@dataclass(frozen=True)
class CommunityDetails:
    node_count: int
    edge_count: int  # temporal intra-edges, parallel timestamps kept
    active_timestamps: int
    activity_pct: float  # share of slice timestamps with >= 1 intra-edge

    def to_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "active_timestamps": self.active_timestamps,
            "activity_pct": round(self.activity_pct, 4),
        }


def _adjacency(c: Community) -> dict[str, list[str]]:
    adj: dict[str, list[str]] = {node: [] for node in c.members}
    for a, b in c.aggregated_edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _bfs_distances(adj: dict[str, list[str]], start: str) -> dict[str, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _source_dependencies(adj: dict[str, list[str]], source: str) -> dict[str, float]:
    """Brandes sweep: dependency of every node on paths from ``source``."""
    dist: dict[str, int] = {source: 0}
    sigma: dict[str, float] = {source: 1.0}
    preds: dict[str, list[str]] = {source: []}
    order: list[str] = []
    queue = deque([source])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                sigma[w] = 0.0
                preds[w] = []
                queue.append(w)
            if dist[w] == dist[u] + 1:
                sigma[w] += sigma[u]
                preds[w].append(u)
    delta = {u: 0.0 for u in order}
    for w in reversed(order):
        for u in preds[w]:
            delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w])
    return delta


@lru_cache(maxsize=16)
def _pivot_deltas(
    c: Community, seed: int, count: int
) -> tuple[tuple[str, ...], tuple[dict[str, float], ...]]:
    """First ``count`` members of a seeded shuffle, with their sweeps."""
    order = list(c.members)
    random.Random(seed).shuffle(order)
    adj = _adjacency(c)
    chosen = tuple(order[:count])
    return chosen, tuple(_source_dependencies(adj, s) for s in chosen)


def approximate_betweenness(
    c: Community, v: str, seed: int = 0, pivot_count: Optional[int] = None
) -> float:
    """Normalized betweenness of ``v`` from sampled shortest-path sources.

    All nodes of a community share one seeded pivot order; each node uses
    the first k = ceil(n / 4) pivots other than itself.  The pivot sum is
    rescaled by (n - 1) / k, an unbiased estimate of the full source sum
    since v contributes nothing as its own source, then halved for
    undirectedness and normalized by (n - 1)(n - 2) / 2.  Asking for all
    pivots reproduces exact Brandes.
    """
    n = c.size
    if n < 3:
        return 0.0
    k = pivot_count if pivot_count is not None else math.ceil(0.25 * n)
    k = max(1, min(k, n - 1))
    sources, deltas = _pivot_deltas(c, seed, min(k + 1, n))
    raw = 0.0
    used = 0
    for s, delta in zip(sources, deltas):
        if s == v:
            continue
        raw += delta.get(v, 0.0)
        used += 1
        if used == k:
            break
    estimate = raw * (n - 1) / k / 2.0
    normalized = estimate / ((n - 1) * (n - 2) / 2.0)
    return min(1.0, max(0.0, normalized))


def exact_betweenness(c: Community, v: str) -> float:
    return approximate_betweenness(c, v, pivot_count=c.size)


def closeness(c: Community, v: str) -> float:
    """Component-wise closeness scaled by component reach.

    For a node whose component holds r of the n members:
    ((r - 1) / (n - 1)) * ((r - 1) / sum of distances).  Connected graphs
    reduce to the plain (n - 1) / sum form; the reach factor keeps values
    in [0, 1] and comparable when the graph is disconnected.  Isolated
    nodes score 0.
    """
    n = c.size
    if n < 2:
        return 0.0
    dist = _bfs_distances(_adjacency(c), v)
    total = sum(dist.values())
    r = len(dist)
    if r < 2 or total == 0:
        return 0.0
    return ((r - 1) / (n - 1)) * ((r - 1) / total)


def node_details(
    c: Community,
    v: str,
    seed: int = 0,
    metadata: Optional[dict[str, str]] = None,
    pivot_count: Optional[int] = None,
) -> NodeDetails:
    if v not in c.member_set:
        raise NodeNotInCommunity(f"node {v!r} is not in community {c.key}")
    n = c.size
    degree = sum(1 for a, b in c.aggregated_edges if v in (a, b))
    return NodeDetails(
        node=v,
        label=(metadata or {}).get(v),
        degree=degree / (n - 1) if n > 1 else 0.0,
        closeness=closeness(c, v),
        betweenness=approximate_betweenness(c, v, seed, pivot_count),
    )


def community_details(c: Community, slice_: Timeslice) -> CommunityDetails:
    active = len({e.timestamp for e in c.intra_edges})
    return CommunityDetails(
        node_count=c.size,
        edge_count=len(c.intra_edges),
        active_timestamps=active,
        activity_pct=100.0 * active / slice_.span,
    )


def all_node_details(
    c: Community,
    seed: int = 0,
    metadata: Optional[dict[str, str]] = None,
) -> list[NodeDetails]:
    return [node_details(c, v, seed, metadata) for v in c.members]
