"""Temporal-network community analysis and view geometry.

Ingest a timestamped edge list, cut it into uniform timeslices, detect
communities per slice (Louvain), link them across adjacent slices into
evolution events, classify each community structurally and temporally,
and compute the geometry (grid rows, force layouts, activity rasters)
that a UI renders.  A CLI and an HTTP server expose the same pipeline.
"""

from .community import (
    EmptyGraph,
    SliceGraph,
    detect_communities,
    detect_subcommunities,
    link_communities,
    louvain_partition,
    modularity,
)
from .ingest import (
    IngestOptions,
    NoValidEdges,
    ParseReport,
    format_edge_list,
    parse_edge_list,
    parse_metadata,
)
from .layout import (
    BelowThreshold,
    GridLayout,
    SuperGraph,
    TamData,
    global_grid_positions,
    spring_layout,
    summarize_supernodes,
    tam_rows,
)
from .metrics import (
    CommunityDetails,
    NodeDetails,
    NodeNotInCommunity,
    community_details,
    node_details,
)
from .model import (
    AnalysisError,
    AnalysisResult,
    Community,
    CommunityKey,
    EmptyNetwork,
    EvolutionEvent,
    EvolutionLink,
    LinkKind,
    NetworkSummary,
    SliceSuggestion,
    StructuralCategory,
    TemporalCategory,
    TemporalEdge,
    TemporalNetwork,
    Timeslice,
    build_network,
    network_summary,
)
from .pipeline import (
    AnalysisConfig,
    ConfigError,
    export_json,
    export_payload,
    run_pipeline,
)
from .sampling import (
    EmptySample,
    SamplingMethod,
    SamplingSpec,
    apply_sampling,
    parse_sampling_spec,
)
from .slicing import InvalidSliceCount, suggest_slice_counts, uniform_slices
from .taxonomy import (
    StructuralParams,
    TaxonomyMatrix,
    TemporalParams,
    classify_evolution,
    classify_structural,
    classify_temporal,
    taxonomy_matrix,
)

__version__ = "1.0.0"

__all__ = [
    "AnalysisConfig",
    "AnalysisError",
    "AnalysisResult",
    "BelowThreshold",
    "Community",
    "CommunityDetails",
    "CommunityKey",
    "ConfigError",
    "EmptyGraph",
    "EmptyNetwork",
    "EmptySample",
    "EvolutionEvent",
    "EvolutionLink",
    "GridLayout",
    "IngestOptions",
    "InvalidSliceCount",
    "LinkKind",
    "NetworkSummary",
    "NodeDetails",
    "NodeNotInCommunity",
    "NoValidEdges",
    "ParseReport",
    "SamplingMethod",
    "SamplingSpec",
    "SliceGraph",
    "SliceSuggestion",
    "StructuralCategory",
    "StructuralParams",
    "SuperGraph",
    "TamData",
    "TaxonomyMatrix",
    "TemporalCategory",
    "TemporalEdge",
    "TemporalNetwork",
    "TemporalParams",
    "Timeslice",
    "apply_sampling",
    "build_network",
    "classify_evolution",
    "classify_structural",
    "classify_temporal",
    "community_details",
    "detect_communities",
    "detect_subcommunities",
    "export_json",
    "export_payload",
    "format_edge_list",
    "global_grid_positions",
    "link_communities",
    "louvain_partition",
    "modularity",
    "network_summary",
    "node_details",
    "parse_edge_list",
    "parse_metadata",
    "parse_sampling_spec",
    "run_pipeline",
    "spring_layout",
    "suggest_slice_counts",
    "summarize_supernodes",
    "tam_rows",
    "taxonomy_matrix",
    "uniform_slices",
]
