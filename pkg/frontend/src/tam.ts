// Activity raster (one row per member, one square per timestamp) plus the
// per-timestamp intra-edge count strip underneath. Row labels carry the
// metadata color; clicking any square or row label toggles that node's
// highlight, shared with the node-link diagram.

import { ViewState } from "./state.js";
import { TamPayload } from "./types.js";

export type NodeHandler = (node: string) => void;

export class TamView {
  private payload: TamPayload | null = null;

  constructor(
    private root: HTMLElement,
    private state: ViewState,
    private onNodeClick: NodeHandler,
  ) {
    state.subscribe((event) => {
      if (event === "highlight") {
        this.refreshHighlight();
      }
      if (event === "colors") {
        this.refreshColors();
      }
    });
  }

  render(payload: TamPayload): void {
    this.payload = payload;
    this.root.textContent = "";
    const table = document.createElement("table");
    table.className = "tam";
    const span = payload.t_end - payload.t_start + 1;

    for (const row of payload.rows) {
      const tr = table.insertRow();
      tr.className = "tam-row";
      tr.dataset.node = row.node;
      const th = tr.insertCell();
      th.textContent = row.node;
      th.className = "tam-label";
      th.dataset.label = row.label ?? "";
      th.style.color = this.state.colors.colorFor(row.label);
      th.addEventListener("click", () => this.onNodeClick(row.node));
      const active = new Set(row.active);
      for (let i = 0; i < span; i++) {
        const td = tr.insertCell();
        const on = active.has(payload.t_start + i);
        td.className = on ? "tam-square active" : "tam-square";
        td.title = `${row.node} @ t=${payload.t_start + i}`;
        td.addEventListener("click", () => this.onNodeClick(row.node));
      }
    }

    // edge-count strip: darker squares mean more intra-edges
    const maxCount = Math.max(1, ...payload.edge_series);
    const tr = table.insertRow();
    tr.className = "tam-series";
    const th = tr.insertCell();
    th.textContent = "edges";
    th.className = "tam-label";
    for (const [i, count] of payload.edge_series.entries()) {
      const td = tr.insertCell();
      td.className = "tam-series-square";
      td.style.opacity = String(count / maxCount);
      td.title = `${count} edge(s) @ t=${payload.t_start + i}`;
    }

    this.root.appendChild(table);
    this.refreshHighlight();
  }

  /** Node ids of rows currently shown highlighted. */
  highlightedDomNodes(): Set<string> {
    const out = new Set<string>();
    for (const el of this.root.querySelectorAll<HTMLElement>(".tam-row.highlighted")) {
      out.add(el.dataset.node as string);
    }
    return out;
  }

  private refreshHighlight(): void {
    for (const el of this.root.querySelectorAll<HTMLElement>(".tam-row")) {
      const on = this.state.highlightedNodes.has(el.dataset.node as string);
      el.classList.toggle("highlighted", on);
    }
  }

  private refreshColors(): void {
    if (!this.payload) {
      return;
    }
    const byNode = new Map(this.payload.rows.map((r) => [r.node, r.label]));
    for (const el of this.root.querySelectorAll<HTMLElement>(".tam-label")) {
      const node = (el.parentElement as HTMLElement).dataset.node;
      if (node !== undefined) {
        el.style.color = this.state.colors.colorFor(byNode.get(node) ?? null);
      }
    }
  }
}
