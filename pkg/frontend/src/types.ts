// Payload shapes served by the analysis API. The offline export document
// bundles the same payloads, so these interfaces describe both transports.

export interface NetworkSummary {
  nodes: number;
  edges: number;
  active_timestamps: number;
  t_min: number;
  t_max: number;
  metadata_categories: string[];
}

export interface SliceSuggestion {
  min: number;
  default: number;
  max: number;
}

export interface SummaryPayload {
  summary: NetworkSummary;
  suggestion: SliceSuggestion | null;
  mean_modularity: number;
  config: Record<string, unknown>;
  community_count: number;
  link_count: number;
}

export interface MatrixPayload {
  axis_x: string;
  axis_y: string;
  x_labels: string[];
  y_labels: string[];
  counts: number[][]; // rows indexed by y, columns by x
}

export interface Circle {
  slice: number;
  local_id: number;
  column: number;
  row: number;
  size: number;
  structural: string | null;
  temporal: string | null;
  events: string[];
}

export interface LinkEnd {
  slice: number;
  local_id: number;
  column: number;
  row: number;
}

export interface GvLink {
  source: LinkEnd;
  target: LinkEnd;
  overlap: number;
  event: string;
  source_size: number;
  target_size: number;
}

export interface GvColumn {
  column: number;
  slice: number;
  t_start: number;
  t_end: number;
  count: number;
}

export interface GlobalViewPayload {
  capacity: number;
  columns: GvColumn[];
  circles: Circle[];
  links: GvLink[];
}

export interface NodeDetailsPayload {
  node: string;
  label: string | null;
  degree: number;
  closeness: number;
  betweenness: number;
}

export interface CommunityDetailsPayload {
  node_count: number;
  edge_count: number;
  active_timestamps: number;
  activity_pct: number;
}

export interface TamRowPayload {
  node: string;
  label: string | null;
  active: number[];
}

export interface TamPayload {
  t_start: number;
  t_end: number;
  rows: TamRowPayload[];
  edge_series: number[];
}

export interface SupernodePayload {
  sub_id: number;
  size: number;
  label: string | null;
  members: string[];
  position: [number, number];
}

export interface SupergraphPayload {
  supernodes: SupernodePayload[];
  superedges: { source: number; target: number; weight: number }[];
}

export interface CommunityPayload {
  slice: number;
  local_id: number;
  members: string[];
  size: number;
  structural: string | null;
  temporal: string | null;
  events: string[];
  details: CommunityDetailsPayload;
  edges: [string, string][];
  summarized: boolean;
  supergraph: SupergraphPayload | null;
  positions: Record<string, [number, number]> | null;
  node_details: NodeDetailsPayload[] | null;
  tam: TamPayload;
}

export interface SlicePayload {
  index: number;
  t_start: number;
  t_end: number;
  edge_count: number;
}

/** The CLI's --out document: every GET payload in one self-contained file. */
export interface ExportDocument extends SummaryPayload {
  format: string;
  version: number;
  slices: SlicePayload[];
  globalview: GlobalViewPayload;
  matrices: MatrixPayload[];
  communities: CommunityPayload[];
  metadata: Record<string, string>;
}

export interface CommunityRef {
  slice: number;
  local_id: number;
}

export function sameRef(a: CommunityRef | null, b: CommunityRef | null): boolean {
  if (a === null || b === null) {
    return a === b;
  }
  return a.slice === b.slice && a.local_id === b.local_id;
}

export function refKey(ref: CommunityRef): string {
  return `${ref.slice}/${ref.local_id}`;
}
