"""Core data model for temporal networks and analysis results.

A temporal network is an undirected graph whose edges carry integer
timestamps.  Everything downstream (slicing, community detection, taxonomy
classification, layout) operates on the immutable types defined here.
Networks are canonicalized on construction: edge endpoints are ordered,
duplicate ``(u, v, t)`` records collapse to one, and self-loops are dropped
with a count kept for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence


class AnalysisError(Exception):
    """Base class for errors raised by this package."""


class EmptyNetwork(AnalysisError):
    """Raised when construction would yield a network with no valid edges."""


class TemporalEdge(NamedTuple):
    """Undirected edge active at a single integer timestamp.

    Canonical form has ``source <= target`` (string order); `build_network`
    enforces this so that ``(a, b, t)`` and ``(b, a, t)`` compare equal.
    """

    source: str
    target: str
    timestamp: int


def canonical_edge(source: str, target: str, timestamp: int) -> TemporalEdge:
    if source <= target:
        return TemporalEdge(source, target, timestamp)
    return TemporalEdge(target, source, timestamp)


@dataclass(frozen=True)
class TemporalNetwork:
    """Immutable store of nodes, timestamped edges, and optional node labels.

    ``edges`` is kept in canonical order ``(timestamp, source, target)`` so
    that two networks built from permutations of the same edge list compare
    equal.  ``self_loops_dropped``, ``duplicates_collapsed`` and
    ``metadata_dropped`` report what construction discarded.
    """

    nodes: frozenset[str]
    edges: tuple[TemporalEdge, ...]
    metadata: Optional[Mapping[str, str]]
    t_min: int
    t_max: int
    self_loops_dropped: int = 0
    duplicates_collapsed: int = 0
    metadata_dropped: tuple[str, ...] = ()

    @property
    def timestamp_range(self) -> tuple[int, int]:
        return (self.t_min, self.t_max)

    @property
    def span(self) -> int:
        """Number of timestamps in the inclusive observation period."""
        return self.t_max - self.t_min + 1

    @cached_property
    def sorted_nodes(self) -> tuple[str, ...]:
        return tuple(sorted(self.nodes))

    @cached_property
    def active_timestamps(self) -> tuple[int, ...]:
        """Sorted distinct timestamps that carry at least one edge."""
        return tuple(sorted({e.timestamp for e in self.edges}))


@dataclass(frozen=True)
class NetworkSummary:
    node_count: int
    edge_count: int
    active_timestamp_count: int
    t_min: int
    t_max: int
    metadata_categories: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "nodes": self.node_count,
            "edges": self.edge_count,
            "active_timestamps": self.active_timestamp_count,
            "t_min": self.t_min,
            "t_max": self.t_max,
            "metadata_categories": list(self.metadata_categories),
        }


def build_network(
    edges: Iterable[tuple[str, str, int] | TemporalEdge],
    metadata: Optional[Mapping[str, str]] = None,
) -> TemporalNetwork:
    """Canonicalize an edge sequence into a `TemporalNetwork`.

    Self-loops are dropped (counted), duplicate undirected edges within a
    timestamp collapse to one (counted), and metadata keys that are not
    nodes are discarded (recorded in ``metadata_dropped``).

    Raises `EmptyNetwork` if no valid edge remains.
    """
    self_loops = 0
    seen: set[TemporalEdge] = set()
    kept: list[TemporalEdge] = []
    total = 0
    for raw in edges:
        source, target, timestamp = raw
        if not isinstance(timestamp, int) or isinstance(timestamp, bool):
            raise TypeError(f"edge timestamp must be an integer, got {timestamp!r}")
        source = str(source)
        target = str(target)
        if source == target:
            self_loops += 1
            continue
        total += 1
        edge = canonical_edge(source, target, timestamp)
        if edge in seen:
            continue
        seen.add(edge)
        kept.append(edge)
    if not kept:
        raise EmptyNetwork("no valid edges after dropping self-loops and duplicates")

    kept.sort(key=lambda e: (e.timestamp, e.source, e.target))
    nodes = frozenset(n for e in kept for n in (e.source, e.target))

    clean_meta: Optional[dict[str, str]] = None
    dropped: tuple[str, ...] = ()
    if metadata is not None:
        clean_meta = {k: str(v) for k, v in metadata.items() if k in nodes}
        dropped = tuple(sorted(k for k in metadata if k not in nodes))
        # keep key order stable regardless of input dict order
        clean_meta = {k: clean_meta[k] for k in sorted(clean_meta)}

    return TemporalNetwork(
        nodes=nodes,
        edges=tuple(kept),
        metadata=clean_meta,
        t_min=kept[0].timestamp,
        t_max=max(e.timestamp for e in kept),
        self_loops_dropped=self_loops,
        duplicates_collapsed=total - len(kept),
        metadata_dropped=dropped,
    )


def network_summary(net: TemporalNetwork) -> NetworkSummary:
    """Node/edge/active-timestamp counts plus the metadata category list."""
    categories: tuple[str, ...] = ()
    if net.metadata:
        categories = tuple(sorted(set(net.metadata.values())))
    return NetworkSummary(
        node_count=len(net.nodes),
        edge_count=len(net.edges),
        active_timestamp_count=len(net.active_timestamps),
        t_min=net.t_min,
        t_max=net.t_max,
        metadata_categories=categories,
    )


@dataclass(frozen=True)
class Timeslice:
    """Contiguous timestamp interval plus the edges falling in it.

    Indices are 1-based.  Slices produced by `slicing.uniform_slices`
    partition the network's observation period.
    """

    index: int
    t_start: int
    t_end: int
    edges: tuple[TemporalEdge, ...]

    @property
    def span(self) -> int:
        return self.t_end - self.t_start + 1


class StructuralCategory(Enum):
    TREE = "Tree"
    STAR = "Star"
    CIRCULAR = "Circular"
    CLIQUE = "Clique"
    LOW_CONNECTIVITY = "Low-connectivity"

    @property
    def label(self) -> str:
        return self.value


STRUCTURAL_ORDER: tuple[StructuralCategory, ...] = (
    StructuralCategory.TREE,
    StructuralCategory.STAR,
    StructuralCategory.CIRCULAR,
    StructuralCategory.CLIQUE,
    StructuralCategory.LOW_CONNECTIVITY,
)


class Frequency(Enum):
    CONTINUOUS = "Continuous"
    SPORADIC = "Sporadic"


class Dispersion(Enum):
    GROUPED = "Grouped"
    DISPERSED = "Dispersed"


@dataclass(frozen=True)
class TemporalCategory:
    frequency: Frequency
    dispersion: Dispersion

    @property
    def label(self) -> str:
        return f"{self.frequency.value}/{self.dispersion.value}"


TEMPORAL_ORDER: tuple[TemporalCategory, ...] = (
    TemporalCategory(Frequency.CONTINUOUS, Dispersion.GROUPED),
    TemporalCategory(Frequency.CONTINUOUS, Dispersion.DISPERSED),
    TemporalCategory(Frequency.SPORADIC, Dispersion.GROUPED),
    TemporalCategory(Frequency.SPORADIC, Dispersion.DISPERSED),
)


class EvolutionEvent(Enum):
    BIRTH = "Birth"
    DEATH = "Death"
    GROW = "Grow"
    CONTRACT = "Contract"
    SPLIT = "Split"
    MERGE = "Merge"
    PRESERVE = "Preserve"

    @property
    def label(self) -> str:
        return self.value


EVENT_ORDER: tuple[EvolutionEvent, ...] = (
    EvolutionEvent.BIRTH,
    EvolutionEvent.DEATH,
    EvolutionEvent.GROW,
    EvolutionEvent.CONTRACT,
    EvolutionEvent.SPLIT,
    EvolutionEvent.MERGE,
    EvolutionEvent.PRESERVE,
)


class CommunityKey(NamedTuple):
    """Identifies one community: (1-based slice index, dense local id)."""

    slice_index: int
    local_id: int


class LinkKind(Enum):
    """Size comparison between the two ends of an evolution link."""

    GROW = "Grow"
    CONTRACT = "Contract"
    PRESERVE = "Preserve"


@dataclass(frozen=True)
class EvolutionLink:
    """Weighted correspondence between communities in adjacent slices.

    ``kind`` compares community sizes (target vs source).  ``split_branch``
    and ``merge_branch`` mark links that participate in a two-way split or
    merge; a link can be both at once.
    """

    source: CommunityKey
    target: CommunityKey
    overlap: int
    kind: LinkKind
    split_branch: bool = False
    merge_branch: bool = False

    @property
    def event_label(self) -> str:
        """Display label for tooltips: branch membership wins over size kind."""
        if self.split_branch and self.merge_branch:
            return "Split+Merge"
        if self.split_branch:
            return "Split"
        if self.merge_branch:
            return "Merge"
        return self.kind.value


@dataclass(frozen=True)
class Community:
    """A node set detected within one timeslice.

    ``members`` is sorted for determinism.  Taxonomy labels are attached by
    the pipeline after detection; a freshly detected community carries
    ``structural=None``, ``temporal=None`` and an empty event set.
    """

    key: CommunityKey
    members: tuple[str, ...]
    intra_edges: tuple[TemporalEdge, ...]
    structural: Optional[StructuralCategory] = None
    temporal: Optional[TemporalCategory] = None
    events: frozenset[EvolutionEvent] = frozenset()

    @property
    def size(self) -> int:
        return len(self.members)

    @cached_property
    def member_set(self) -> frozenset[str]:
        return frozenset(self.members)

    @cached_property
    def aggregated_edges(self) -> tuple[tuple[str, str], ...]:
        """Distinct undirected intra-community node pairs, sorted."""
        return tuple(sorted({(e.source, e.target) for e in self.intra_edges}))

    def sorted_events(self) -> tuple[EvolutionEvent, ...]:
        return tuple(ev for ev in EVENT_ORDER if ev in self.events)


@dataclass(frozen=True)
class SliceSuggestion:
    """Suitable slice-count range derived from local edge density."""

    min_count: int
    default_count: int
    max_count: int

    def to_dict(self) -> dict:
        return {
            "min": self.min_count,
            "default": self.default_count,
            "max": self.max_count,
        }


@dataclass
class AnalysisResult:
    """Full pipeline output.

    ``mean_modularity`` averages per-slice modularity of the detection
    partitions over slices that contain at least one edge.  ``config`` echoes
    the run parameters (including the effective slice count after clamping).
    """

    summary: NetworkSummary
    slices: tuple[Timeslice, ...]
    communities: tuple[Community, ...]
    links: tuple[EvolutionLink, ...]
    mean_modularity: float
    suggestion: Optional[SliceSuggestion] = None
    config: dict = field(default_factory=dict)
    metadata: Optional[Mapping[str, str]] = None

    @cached_property
    def by_key(self) -> dict[CommunityKey, Community]:
        return {c.key: c for c in self.communities}

    @cached_property
    def by_slice(self) -> dict[int, tuple[Community, ...]]:
        out: dict[int, list[Community]] = {}
        for c in self.communities:
            out.setdefault(c.key.slice_index, []).append(c)
        return {
            idx: tuple(sorted(cs, key=lambda c: c.key.local_id))
            for idx, cs in out.items()
        }

    def slice_by_index(self, index: int) -> Timeslice:
        return self.slices[index - 1]


def check_slice_disjoint(communities: Sequence[Community]) -> bool:
    """True iff communities within each slice are pairwise node-disjoint."""
    seen: dict[int, set[str]] = {}
    for c in communities:
        pool = seen.setdefault(c.key.slice_index, set())
        if pool & c.member_set:
            return False
        pool |= c.member_set
    return True
