"""Optional pre-analysis reduction of nodes and edges.

Three methods: uniform random node sampling, uniform random edge sampling,
and snowball sampling (BFS expansion from random seed nodes over the
time-aggregated graph).  All are deterministic given the spec's RNG seed.
Random node sampling draws a prefix of a single seeded permutation, so the
kept node sets are nested across fractions under the same seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum

from .model import AnalysisError, TemporalNetwork, build_network


class EmptySample(AnalysisError):
    """Raised when sampling leaves no edges."""


class SamplingMethod(Enum):
    NONE = "none"
    RANDOM_NODE = "node"
    RANDOM_EDGE = "edge"
    SNOWBALL = "snowball"


@dataclass(frozen=True)
class SamplingSpec:
    method: SamplingMethod = SamplingMethod.NONE
    fraction: float = 1.0
    seeds: int = 10
    waves: int = 2
    rng_seed: int = 0

    def __post_init__(self):
        if self.method in (SamplingMethod.RANDOM_NODE, SamplingMethod.RANDOM_EDGE):
            if not 0 < self.fraction <= 1:
                raise ValueError(f"fraction must be in (0, 1], got {self.fraction}")
        if self.method is SamplingMethod.SNOWBALL:
            if self.seeds < 1 or self.waves < 1:
                raise ValueError("snowball needs seeds >= 1 and waves >= 1")

    def to_dict(self) -> dict:
        return {
            "method": self.method.value,
            "fraction": self.fraction,
            "seeds": self.seeds,
            "waves": self.waves,
            "rng_seed": self.rng_seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SamplingSpec":
        method = SamplingMethod(data.get("method", "none"))
        return cls(
            method=method,
            fraction=float(data.get("fraction", 1.0)),
            seeds=int(data.get("seeds", 10)),
            waves=int(data.get("waves", 2)),
            rng_seed=int(data.get("rng_seed", 0)),
        )


def parse_sampling_spec(text: str, rng_seed: int = 0) -> SamplingSpec:
    """Parse a CLI-style spec string.

    Formats: ``none``, ``node:0.5``, ``edge:0.25``,
    ``snowball:seeds=10,waves=2``.
    """
    text = text.strip()
    if not text or text == "none":
        return SamplingSpec(rng_seed=rng_seed)
    kind, _, rest = text.partition(":")
    if kind in ("node", "edge"):
        method = SamplingMethod.RANDOM_NODE if kind == "node" else SamplingMethod.RANDOM_EDGE
        return SamplingSpec(method=method, fraction=float(rest), rng_seed=rng_seed)
    if kind == "snowball":
        params = {"seeds": 10, "waves": 2}
        if rest:
            for item in rest.split(","):
                name, _, value = item.partition("=")
                if name not in params:
                    raise ValueError(f"unknown snowball parameter {name!r}")
                params[name] = int(value)
        return SamplingSpec(
            method=SamplingMethod.SNOWBALL,
            seeds=params["seeds"],
            waves=params["waves"],
            rng_seed=rng_seed,
        )
    raise ValueError(f"unknown sampling method {kind!r}")


def aggregated_adjacency(net: TemporalNetwork) -> dict[str, list[str]]:
    """Neighbor lists of the time-aggregated graph, sorted for determinism."""
    neighbors: dict[str, set[str]] = {n: set() for n in net.sorted_nodes}
    for e in net.edges:
        neighbors[e.source].add(e.target)
        neighbors[e.target].add(e.source)
    return {n: sorted(peers) for n, peers in neighbors.items()}


def snowball_nodes(net: TemporalNetwork, starts: list[str], waves: int) -> set[str]:
    """BFS frontier expansion: nodes within ``waves`` hops of any start."""
    adjacency = aggregated_adjacency(net)
    visited = set(starts)
    frontier = sorted(visited)
    for _ in range(waves):
        nxt = []
        for node in frontier:
            for peer in adjacency[node]:
                if peer not in visited:
                    visited.add(peer)
                    nxt.append(peer)
        frontier = nxt
        if not frontier:
            break
    return visited


def _induced(net: TemporalNetwork, nodes: set[str]) -> TemporalNetwork:
    kept = [e for e in net.edges if e.source in nodes and e.target in nodes]
    if not kept:
        raise EmptySample("sampled subnetwork has no edges")
    metadata = None
    if net.metadata is not None:
        metadata = {k: v for k, v in net.metadata.items() if k in nodes}
    return build_network(kept, metadata)


def apply_sampling(net: TemporalNetwork, spec: SamplingSpec) -> TemporalNetwork:
    """Reduce the network per ``spec``.  Identity when method is ``none``."""
    if spec.method is SamplingMethod.NONE:
        return net
    rng = random.Random(spec.rng_seed)

    if spec.method is SamplingMethod.RANDOM_NODE:
        order = list(net.sorted_nodes)
        rng.shuffle(order)
        keep = math.ceil(spec.fraction * len(order))
        return _induced(net, set(order[:keep]))

    if spec.method is SamplingMethod.RANDOM_EDGE:
        order = list(net.edges)
        rng.shuffle(order)
        keep = math.ceil(spec.fraction * len(order))
        kept = order[:keep]
        if not kept:
            raise EmptySample("sampled subnetwork has no edges")
        metadata = None
        if net.metadata is not None:
            nodes = {n for e in kept for n in (e.source, e.target)}
            metadata = {k: v for k, v in net.metadata.items() if k in nodes}
        return build_network(kept, metadata)

    # snowball
    order = list(net.sorted_nodes)
    rng.shuffle(order)
    starts = order[: min(spec.seeds, len(order))]
    return _induced(net, snowball_nodes(net, starts, spec.waves))
