"""Community taxonomies: structural shape, temporal activity, evolution.

Structural classification looks at the aggregated intra-community graph
and applies threshold rules in a fixed most-specific-first precedence:
Clique, Circular, Star, Tree, Low-connectivity.  Temporal classification
combines an activity-frequency test (edges in every timestamp of the
slice or not) with a dispersion test comparing the timestamp spread
against a uniform reference.  Evolution events are derived from the
cross-slice link structure.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .model import (
    AnalysisError,
    Community,
    CommunityKey,
    Dispersion,
    EvolutionEvent,
    EvolutionLink,
    Frequency,
    EVENT_ORDER,
    STRUCTURAL_ORDER,
    StructuralCategory,
    TEMPORAL_ORDER,
    TemporalCategory,
    Timeslice,
)


@dataclass(frozen=True)
class StructuralParams:
    """Thresholds that admit near-prototype shapes into each category."""

    clique_density_min: float = 0.9
    star_hub_min: float = 0.8
    star_leaf_median_max: int = 1
    circular_degree2_min: float = 0.9
    tree_slack: int = 0


@dataclass(frozen=True)
class TemporalParams:
    # Grouped iff sigma / (S / sqrt(12)) <= dispersion_alpha
    dispersion_alpha: float = 0.5


def _degrees(c: Community) -> dict[str, int]:
    deg = {node: 0 for node in c.members}
    for a, b in c.aggregated_edges:
        deg[a] += 1
        deg[b] += 1
    return deg


def _is_connected(c: Community) -> bool:
    if not c.members:
        return False
    adj: dict[str, list[str]] = {node: [] for node in c.members}
    for a, b in c.aggregated_edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {c.members[0]}
    stack = [c.members[0]]
    while stack:
        for peer in adj[stack.pop()]:
            if peer not in seen:
                seen.add(peer)
                stack.append(peer)
    return len(seen) == len(c.members)


def classify_structural(
    c: Community, params: StructuralParams = StructuralParams()
) -> StructuralCategory:
    """Classify the aggregated intra-community graph; total and deterministic."""
    n = c.size
    m = len(c.aggregated_edges)
    if n < 2:
        return StructuralCategory.LOW_CONNECTIVITY
    density = 2.0 * m / (n * (n - 1))
    if density >= params.clique_density_min:
        return StructuralCategory.CLIQUE
    degrees = _degrees(c)
    connected = _is_connected(c)
    degree2_fraction = sum(1 for d in degrees.values() if d == 2) / n
    if (
        connected
        and degree2_fraction >= params.circular_degree2_min
        and m <= n + params.tree_slack
    ):
        return StructuralCategory.CIRCULAR
    if (
        max(degrees.values()) / (n - 1) >= params.star_hub_min
        and statistics.median(degrees.values()) <= params.star_leaf_median_max
    ):
        return StructuralCategory.STAR
    if connected and m <= n - 1 + params.tree_slack:
        return StructuralCategory.TREE
    return StructuralCategory.LOW_CONNECTIVITY


def classify_temporal(
    c: Community, slice_: Timeslice, params: TemporalParams = TemporalParams()
) -> TemporalCategory:
    """Frequency x dispersion of intra-edge activity over the slice."""
    if not c.intra_edges:
        raise AnalysisError(
            f"community {c.key} has no intra-community edges to classify"
        )
    span = slice_.span
    timestamps = [e.timestamp for e in c.intra_edges]
    active = len(set(timestamps))
    frequency = Frequency.CONTINUOUS if active == span else Frequency.SPORADIC
    sigma = statistics.pstdev(timestamps)
    sigma_uniform = span / math.sqrt(12.0)
    if sigma_uniform == 0:
        dispersion = Dispersion.GROUPED
    else:
        grouped = sigma / sigma_uniform <= params.dispersion_alpha
        dispersion = Dispersion.GROUPED if grouped else Dispersion.DISPERSED
    return TemporalCategory(frequency, dispersion)


def classify_evolution(
    links: Iterable[EvolutionLink], communities: Sequence[Community]
) -> dict[CommunityKey, frozenset[EvolutionEvent]]:
    """Event sets per community, derived from the adjacent-slice links.

    A community with no incoming link is a Birth, one with no outgoing link
    a Death; each outgoing link adds its size-comparison kind.  A two-way
    branched fan-out marks Split on the source, a two-way branched fan-in
    marks Merge on the target.  Every community ends up with at least one
    event.
    """
    incoming: dict[CommunityKey, list[EvolutionLink]] = {}
    outgoing: dict[CommunityKey, list[EvolutionLink]] = {}
    for link in links:
        outgoing.setdefault(link.source, []).append(link)
        incoming.setdefault(link.target, []).append(link)

    result: dict[CommunityKey, frozenset[EvolutionEvent]] = {}
    for c in communities:
        events: set[EvolutionEvent] = set()
        ins = incoming.get(c.key, [])
        outs = outgoing.get(c.key, [])
        if not ins:
            events.add(EvolutionEvent.BIRTH)
        if not outs:
            events.add(EvolutionEvent.DEATH)
        for link in outs:
            events.add(EvolutionEvent[link.kind.name])
        if sum(1 for link in outs if link.split_branch) == 2:
            events.add(EvolutionEvent.SPLIT)
        if sum(1 for link in ins if link.merge_branch) == 2:
            events.add(EvolutionEvent.MERGE)
        result[c.key] = frozenset(events)
    return result


TAXONOMY_AXES = ("structural", "temporal", "evolution")


@dataclass(frozen=True)
class TaxonomyMatrix:
    """Counts of communities per (y category, x category) pair."""

    axis_x: str
    axis_y: str
    x_labels: tuple[str, ...]
    y_labels: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]  # rows indexed by y, columns by x

    def to_dict(self) -> dict:
        return {
            "axis_x": self.axis_x,
            "axis_y": self.axis_y,
            "x_labels": list(self.x_labels),
            "y_labels": list(self.y_labels),
            "counts": [list(row) for row in self.counts],
        }


def _axis_labels(axis: str) -> tuple[str, ...]:
    if axis == "structural":
        return tuple(cat.label for cat in STRUCTURAL_ORDER)
    if axis == "temporal":
        return tuple(cat.label for cat in TEMPORAL_ORDER)
    if axis == "evolution":
        return tuple(ev.label for ev in EVENT_ORDER)
    raise ValueError(f"unknown taxonomy axis {axis!r}; expected one of {TAXONOMY_AXES}")


def _community_labels(c: Community, axis: str) -> list[str]:
    if axis == "structural":
        return [c.structural.label] if c.structural is not None else []
    if axis == "temporal":
        return [c.temporal.label] if c.temporal is not None else []
    return [ev.label for ev in c.sorted_events()]


def taxonomy_matrix(
    communities: Sequence[Community], axis_x: str, axis_y: str
) -> TaxonomyMatrix:
    """Cross-tabulate classified communities over two taxonomy axes.

    Structural and temporal axes are single-valued, so each community adds
    one count; the evolution axis contributes once per event in the
    community's set (and once per event pair when both axes are evolution).
    """
    ax, ay = axis_x.strip().lower(), axis_y.strip().lower()
    x_labels = _axis_labels(ax)
    y_labels = _axis_labels(ay)
    x_index = {label: i for i, label in enumerate(x_labels)}
    y_index = {label: i for i, label in enumerate(y_labels)}
    grid = [[0] * len(x_labels) for _ in y_labels]
    for c in communities:
        for ylab in _community_labels(c, ay):
            for xlab in _community_labels(c, ax):
                grid[y_index[ylab]][x_index[xlab]] += 1
    return TaxonomyMatrix(
        axis_x=ax,
        axis_y=ay,
        x_labels=x_labels,
        y_labels=y_labels,
        counts=tuple(tuple(row) for row in grid),
    )


def axis_category_labels(axis: str) -> tuple[str, ...]:
    """Serialization-order labels for one axis (validates the axis name)."""
    return _axis_labels(axis.strip().lower())


def classify_all(
    communities: Sequence[Community],
    slices: Mapping[int, Timeslice],
    links: Sequence[EvolutionLink],
    structural: StructuralParams = StructuralParams(),
    temporal: TemporalParams = TemporalParams(),
) -> list[Community]:
    """Attach all three taxonomies to freshly detected communities."""
    events = classify_evolution(links, communities)
    classified = []
    for c in communities:
        classified.append(
            Community(
                key=c.key,
                members=c.members,
                intra_edges=c.intra_edges,
                structural=classify_structural(c, structural),
                temporal=classify_temporal(c, slices[c.key.slice_index], temporal),
                events=events[c.key],
            )
        )
    return classified
