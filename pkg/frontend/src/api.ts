// Data access. The same DataSource interface is served by the HTTP client
// (live server) and by a loaded export document (offline replay), so the
// views never know which transport they are on.

import {
  CommunityPayload,
  ExportDocument,
  GlobalViewPayload,
  MatrixPayload,
  NodeDetailsPayload,
  SummaryPayload,
} from "./types.js";

export interface DataSource {
  getSummary(): Promise<SummaryPayload>;
  getGlobalview(): Promise<GlobalViewPayload>;
  getMatrix(x: string, y: string): Promise<MatrixPayload>;
  getCommunity(slice: number, localId: number): Promise<CommunityPayload>;
  getNode(slice: number, localId: number, node: string): Promise<NodeDetailsPayload>;
}

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url);
  if (!response.ok) {
    throw new Error(`${url}: HTTP ${response.status}`);
  }
  return (await response.json()) as T;
}

/** Client for one analysis id on a running server. */
export class HttpSource implements DataSource {
  constructor(
    private baseUrl: string,
    public readonly analysisId: string,
  ) {}

  private url(path: string): string {
    return `${this.baseUrl}/api/${this.analysisId}${path}`;
  }

  getSummary(): Promise<SummaryPayload> {
    return getJson(this.url("/summary"));
  }

  getGlobalview(): Promise<GlobalViewPayload> {
    return getJson(this.url("/globalview"));
  }

  getMatrix(x: string, y: string): Promise<MatrixPayload> {
    const params = new URLSearchParams({ x, y });
    return getJson(this.url(`/matrix?${params}`));
  }

  getCommunity(slice: number, localId: number): Promise<CommunityPayload> {
    return getJson(this.url(`/community/${slice}/${localId}`));
  }

  getNode(slice: number, localId: number, node: string): Promise<NodeDetailsPayload> {
    return getJson(
      this.url(`/node/${slice}/${localId}/${encodeURIComponent(node)}`),
    );
  }
}

export interface UploadConfig {
  slice_count?: number;
  min_community_size?: number;
  sampling?: string;
  seed?: number;
  tau?: number;
}

export interface UploadResult {
  analysis_id: string;
  summary: SummaryPayload;
}

/** POST an edge list (and optional metadata) for analysis. */
export async function uploadNetwork(
  baseUrl: string,
  edges: Blob,
  metadata: Blob | null,
  config: UploadConfig,
): Promise<UploadResult> {
  const form = new FormData();
  form.append("edges", edges, "edges.txt");
  if (metadata !== null) {
    form.append("metadata", metadata, "metadata.txt");
  }
  for (const [key, value] of Object.entries(config)) {
    if (value !== undefined) {
      form.append(key, String(value));
    }
  }
  const response = await fetch(`${baseUrl}/api/network`, {
    method: "POST",
    body: form,
  });
  if (!response.ok) {
    throw new Error(`upload failed: HTTP ${response.status}`);
  }
  return (await response.json()) as UploadResult;
}

/** Serves every payload out of a CLI-exported document; no server needed. */
export class OfflineSource implements DataSource {
  constructor(private doc: ExportDocument) {
    if (doc.format !== "temponet-analysis") {
      throw new Error(`not an analysis export: format ${doc.format}`);
    }
  }

  getSummary(): Promise<SummaryPayload> {
    const { summary, suggestion, mean_modularity, config } = this.doc;
    return Promise.resolve({
      summary,
      suggestion,
      mean_modularity,
      config,
      community_count: this.doc.community_count,
      link_count: this.doc.link_count,
    });
  }

  getGlobalview(): Promise<GlobalViewPayload> {
    return Promise.resolve(this.doc.globalview);
  }

  getMatrix(x: string, y: string): Promise<MatrixPayload> {
    const found = this.doc.matrices.find(
      (m) => m.axis_x === x && m.axis_y === y,
    );
    if (!found) {
      return Promise.reject(new Error(`no matrix for axes ${x} x ${y}`));
    }
    return Promise.resolve(found);
  }

  getCommunity(slice: number, localId: number): Promise<CommunityPayload> {
    const found = this.doc.communities.find(
      (c) => c.slice === slice && c.local_id === localId,
    );
    if (!found) {
      return Promise.reject(new Error(`no community ${slice}/${localId}`));
    }
    return Promise.resolve(found);
  }

  getNode(
    slice: number,
    localId: number,
    node: string,
  ): Promise<NodeDetailsPayload> {
    return this.getCommunity(slice, localId).then((c) => {
      const found = c.node_details?.find((d) => d.node === node);
      if (!found) {
        throw new Error(`no node ${node} in community ${slice}/${localId}`);
      }
      return found;
    });
  }
}
