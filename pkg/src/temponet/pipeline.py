"""End-to-end analysis: sampling, slicing, detection, linking, taxonomy.

Also builds the JSON payloads served over HTTP; the CLI export bundles the
same payloads into one document so the UI can replay an analysis offline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Optional

from .community import detect_slice, link_communities
from .layout import (
    GridLayout,
    build_supergraph,
    community_positions,
    global_grid_positions,
    spring_layout,
    tam_rows,
)
from .metrics import all_node_details, community_details, node_details
from .model import (
    AnalysisError,
    AnalysisResult,
    Community,
    EvolutionLink,
    TemporalNetwork,
    network_summary,
)
from .sampling import SamplingMethod, SamplingSpec, apply_sampling
from .slicing import suggest_slice_counts, uniform_slices
from .taxonomy import (
    StructuralParams,
    TAXONOMY_AXES,
    TemporalParams,
    classify_all,
    taxonomy_matrix,
)


class ConfigError(AnalysisError):
    """Raised for out-of-range analysis parameters."""


@dataclass(frozen=True)
class AnalysisConfig:
    slice_count: int
    min_community_size: int = 3
    sampling: SamplingSpec = field(default_factory=SamplingSpec)
    seed: int = 0
    tau: float = 0.5
    structural: StructuralParams = field(default_factory=StructuralParams)
    temporal: TemporalParams = field(default_factory=TemporalParams)
    node_threshold: int = 200  # summarize communities above this size
    layout_iterations: int = 300

    def __post_init__(self):
        if self.slice_count < 1:
            raise ConfigError(f"slice_count must be >= 1, got {self.slice_count}")
        if self.min_community_size < 1:
            raise ConfigError(
                f"min_community_size must be >= 1, got {self.min_community_size}"
            )
        if not 0 < self.tau <= 1:
            raise ConfigError(f"tau must be in (0, 1], got {self.tau}")
        if self.node_threshold < 1:
            raise ConfigError(f"node_threshold must be >= 1, got {self.node_threshold}")

    def to_dict(self) -> dict:
        return {
            "slice_count": self.slice_count,
            "min_community_size": self.min_community_size,
            "sampling": self.sampling.to_dict(),
            "seed": self.seed,
            "tau": self.tau,
            "node_threshold": self.node_threshold,
            "layout_iterations": self.layout_iterations,
        }


def run_pipeline(
    net: TemporalNetwork,
    config: AnalysisConfig,
    metadata: Optional[Mapping[str, str]] = None,
    progress: Optional[dict] = None,
) -> AnalysisResult:
    """Sampling, uniform slicing, per-slice Louvain, linking, classification.

    ``progress``, when given, is updated in place with the current stage so
    a supervisor can report how far a long run got.
    """

    def stage(name: str) -> None:
        if progress is not None:
            progress["stage"] = name

    stage("sampling")
    if config.sampling.method is not SamplingMethod.NONE:
        net = apply_sampling(net, config.sampling)
    if metadata is None and net.metadata is not None:
        metadata = dict(net.metadata)
    stage("suggesting")
    suggestion = suggest_slice_counts(net)
    stage("slicing")
    slices = uniform_slices(net, config.slice_count)

    communities: list[Community] = []
    modularities: list[float] = []
    by_slice: dict[int, list[Community]] = {}
    for s in slices:
        stage(f"detecting slice {s.index}/{len(slices)}")
        found, q = detect_slice(s, config.min_community_size, config.seed)
        communities.extend(found)
        by_slice[s.index] = found
        if q is not None:
            modularities.append(q)

    stage("linking")
    links: list[EvolutionLink] = []
    for s, nxt in zip(slices, slices[1:]):
        links.extend(link_communities(by_slice[s.index], by_slice[nxt.index], config.tau))

    stage("classifying")
    slice_map = {s.index: s for s in slices}
    classified = classify_all(
        communities, slice_map, links, config.structural, config.temporal
    )

    mean_q = sum(modularities) / len(modularities) if modularities else 0.0
    echo = config.to_dict()
    echo["effective_slice_count"] = len(slices)
    stage("done")
    return AnalysisResult(
        summary=network_summary(net),
        slices=tuple(slices),
        communities=tuple(classified),
        links=tuple(links),
        mean_modularity=mean_q,
        suggestion=suggestion,
        config=echo,
        metadata=dict(metadata) if metadata else None,
    )


# ---------------------------------------------------------------------------
# JSON payloads (shared by the HTTP server and the CLI export)


def _round_pos(xy: tuple[float, float]) -> list[float]:
    return [round(xy[0], 6), round(xy[1], 6)]


def summary_payload(result: AnalysisResult) -> dict:
    return {
        "summary": result.summary.to_dict(),
        "suggestion": result.suggestion.to_dict() if result.suggestion else None,
        "mean_modularity": round(result.mean_modularity, 6),
        "config": result.config,
        "community_count": len(result.communities),
        "link_count": len(result.links),
    }


def _slices_by_index(result: AnalysisResult) -> dict[int, tuple[Community, ...]]:
    return {s.index: result.by_slice.get(s.index, ()) for s in result.slices}


def grid_layout(result: AnalysisResult) -> GridLayout:
    return global_grid_positions(_slices_by_index(result), result.links)


def globalview_payload(result: AnalysisResult) -> dict:
    layout = grid_layout(result)
    columns = [
        {
            "column": pos,
            "slice": idx,
            "t_start": result.slice_by_index(idx).t_start,
            "t_end": result.slice_by_index(idx).t_end,
            "count": len(result.by_slice.get(idx, ())),
        }
        for pos, idx in enumerate(layout.columns)
    ]
    col_of = {idx: pos for pos, idx in enumerate(layout.columns)}
    circles = [
        {
            "slice": c.key.slice_index,
            "local_id": c.key.local_id,
            "column": col_of[c.key.slice_index],
            "row": layout.rows[c.key],
            "size": c.size,
            "structural": c.structural.label if c.structural else None,
            "temporal": c.temporal.label if c.temporal else None,
            "events": [ev.label for ev in c.sorted_events()],
        }
        for c in result.communities
    ]
    links = [
        {
            "source": {
                "slice": l.source.slice_index,
                "local_id": l.source.local_id,
                "column": col_of[l.source.slice_index],
                "row": l.source_row,
            },
            "target": {
                "slice": l.target.slice_index,
                "local_id": l.target.local_id,
                "column": col_of[l.target.slice_index],
                "row": l.target_row,
            },
            "overlap": l.overlap,
            "event": l.event,
            "source_size": result.by_key[l.source].size,
            "target_size": result.by_key[l.target].size,
        }
        for l in layout.links
    ]
    return {
        "capacity": layout.capacity,
        "columns": columns,
        "circles": circles,
        "links": links,
    }


def matrix_payload(result: AnalysisResult, axis_x: str, axis_y: str) -> dict:
    return taxonomy_matrix(result.communities, axis_x, axis_y).to_dict()


def community_payload(
    result: AnalysisResult,
    slice_index: int,
    local_id: int,
    include_full: bool = True,
) -> dict:
    """Everything the local views need for one community.

    Communities above the configured size threshold are flagged
    ``summarized`` and carry a supernode-level graph with its own layout.
    ``include_full`` controls whether full node positions and per-node
    metrics are computed for those large communities (the HTTP endpoint
    always includes them; bulk export skips them to stay tractable).
    """
    c = result.by_key.get((slice_index, local_id))
    if c is None:
        raise KeyError(f"no community {local_id} in slice {slice_index}")
    slice_ = result.slice_by_index(slice_index)
    meta = dict(result.metadata or {})
    cfg = result.config
    seed = cfg.get("seed", 0)
    iterations = cfg.get("layout_iterations", 300)
    threshold = cfg.get("node_threshold", 200)
    summarized = c.size > threshold

    payload: dict = {
        "slice": slice_index,
        "local_id": local_id,
        "members": list(c.members),
        "size": c.size,
        "structural": c.structural.label if c.structural else None,
        "temporal": c.temporal.label if c.temporal else None,
        "events": [ev.label for ev in c.sorted_events()],
        "details": community_details(c, slice_).to_dict(),
        "edges": [[a, b] for a, b in c.aggregated_edges],
        "summarized": summarized,
        "supergraph": None,
        "positions": None,
        "node_details": None,
    }

    tam = tam_rows(c, slice_, meta)
    payload["tam"] = {
        "t_start": tam.t_start,
        "t_end": tam.t_end,
        "rows": [
            {"node": r.node, "label": r.label, "active": list(r.active)}
            for r in tam.rows
        ],
        "edge_series": list(tam.edge_series),
    }

    if summarized:
        sg = build_supergraph(c, meta, seed)
        sub_ids = [sn.sub_id for sn in sg.supernodes]
        sub_edges = [(str(e.source), str(e.target)) for e in sg.superedges]
        sub_pos = spring_layout([str(i) for i in sub_ids], sub_edges, seed, iterations)
        payload["supergraph"] = {
            "supernodes": [
                {
                    "sub_id": sn.sub_id,
                    "size": sn.size,
                    "label": sn.label,
                    "members": list(sn.members),
                    "position": _round_pos(sub_pos[str(sn.sub_id)]),
                }
                for sn in sg.supernodes
            ],
            "superedges": [
                {"source": e.source, "target": e.target, "weight": e.weight}
                for e in sg.superedges
            ],
        }

    if include_full or not summarized:
        positions = community_positions(c, seed, iterations)
        payload["positions"] = {v: _round_pos(xy) for v, xy in positions.items()}
        payload["node_details"] = [
            d.to_dict() for d in all_node_details(c, seed, meta)
        ]
    return payload


def node_payload(
    result: AnalysisResult, slice_index: int, local_id: int, node: str
) -> dict:
    c = result.by_key.get((slice_index, local_id))
    if c is None:
        raise KeyError(f"no community {local_id} in slice {slice_index}")
    meta = dict(result.metadata or {})
    seed = result.config.get("seed", 0)
    return node_details(c, node, seed, meta).to_dict()


def export_payload(result: AnalysisResult) -> dict:
    """One self-contained document mirroring every GET payload.

    Large (summarized) communities keep their supernode level but skip full
    per-node positions and metrics; the live server computes those on
    demand.
    """
    slices = [
        {
            "index": s.index,
            "t_start": s.t_start,
            "t_end": s.t_end,
            "edge_count": len(s.edges),
        }
        for s in result.slices
    ]
    matrices = [
        matrix_payload(result, ax, ay)
        for ay, ax in product(TAXONOMY_AXES, TAXONOMY_AXES)
    ]
    communities = [
        community_payload(result, c.key.slice_index, c.key.local_id, include_full=False)
        for c in result.communities
    ]
    return {
        "format": "temponet-analysis",
        "version": 1,
        **summary_payload(result),
        "slices": slices,
        "globalview": globalview_payload(result),
        "matrices": matrices,
        "communities": communities,
        "metadata": dict(result.metadata) if result.metadata else {},
    }


def export_json(result: AnalysisResult) -> str:
    return json.dumps(export_payload(result), sort_keys=True, indent=2)
