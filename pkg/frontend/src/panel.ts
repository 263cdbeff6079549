// Adaptive detail panel. Shows network-level facts when nothing is
// selected, community details once a community is chosen, and per-node
// metrics when exactly one node is highlighted. Also hosts the metadata
// color pickers; changes there recolor both local views through the
// shared state.

import { ViewState } from "./state.js";
import {
  CommunityPayload,
  NodeDetailsPayload,
  SummaryPayload,
} from "./types.js";

export class DetailPanel {
  private summary: SummaryPayload | null = null;
  private community: CommunityPayload | null = null;
  private node: NodeDetailsPayload | null = null;

  constructor(
    private root: HTMLElement,
    private state: ViewState,
  ) {}

  setSummary(summary: SummaryPayload): void {
    this.summary = summary;
    this.community = null;
    this.node = null;
    this.redraw();
  }

  setCommunity(community: CommunityPayload | null): void {
    this.community = community;
    this.node = null;
    this.redraw();
  }

  setNode(node: NodeDetailsPayload | null): void {
    this.node = node;
    this.redraw();
  }

  mode(): "network" | "community" | "node" {
    if (this.node) {
      return "node";
    }
    return this.community ? "community" : "network";
  }

  private row(dl: HTMLElement, term: string, value: string): void {
    const dt = document.createElement("dt");
    dt.textContent = term;
    const dd = document.createElement("dd");
    dd.textContent = value;
    dl.appendChild(dt);
    dl.appendChild(dd);
  }

  private redraw(): void {
    this.root.textContent = "";
    const title = document.createElement("h3");
    const dl = document.createElement("dl");
    dl.className = "panel-facts";

    if (this.node) {
      title.textContent = `node ${this.node.node}`;
      this.row(dl, "label", this.node.label ?? "none");
      this.row(dl, "degree", this.node.degree.toFixed(4));
      this.row(dl, "closeness", this.node.closeness.toFixed(4));
      this.row(dl, "betweenness", this.node.betweenness.toFixed(4));
    } else if (this.community) {
      const c = this.community;
      title.textContent = `community (${c.slice},${c.local_id})`;
      this.row(dl, "nodes", String(c.details.node_count));
      this.row(dl, "intra-edges", String(c.details.edge_count));
      this.row(dl, "active timestamps", String(c.details.active_timestamps));
      this.row(dl, "activity", `${c.details.activity_pct.toFixed(1)}%`);
      this.row(dl, "structural", c.structural ?? "?");
      this.row(dl, "temporal", c.temporal ?? "?");
      this.row(dl, "events", c.events.join(", ") || "none");
    } else if (this.summary) {
      const s = this.summary;
      title.textContent = "network";
      this.row(dl, "nodes", String(s.summary.nodes));
      this.row(dl, "edges", String(s.summary.edges));
      this.row(
        dl,
        "timestamps",
        `${s.summary.t_min}..${s.summary.t_max} (${s.summary.active_timestamps} active)`,
      );
      this.row(dl, "communities", String(s.community_count));
      this.row(dl, "links", String(s.link_count));
      this.row(dl, "mean modularity", s.mean_modularity.toFixed(3));
    }

    this.root.appendChild(title);
    this.root.appendChild(dl);
    this.drawColorPickers();
  }

  private drawColorPickers(): void {
    const labels = this.state.colors.labels();
    if (labels.length === 0) {
      return;
    }
    const legend = document.createElement("div");
    legend.className = "color-legend";
    for (const label of labels) {
      const entry = document.createElement("label");
      entry.className = "color-entry";
      const input = document.createElement("input");
      input.type = "color";
      input.value = this.state.colors.colorFor(label);
      input.dataset.label = label;
      input.addEventListener("input", () => {
        this.state.overrideColor(label, input.value);
      });
      entry.appendChild(input);
      entry.appendChild(document.createTextNode(label));
      legend.appendChild(entry);
    }
    this.root.appendChild(legend);
  }
}
