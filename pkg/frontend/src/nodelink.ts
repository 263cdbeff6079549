// Node-link diagram for the selected community. Nodes sit at the
// server-computed spring positions and are colored by metadata label.
// Clicking a node toggles its highlight (shared with the activity raster).
// Summarized communities render their supernode graph instead; clicking a
// supernode highlights all of its members in both local views.

import { ViewState } from "./state.js";
import { CommunityPayload } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 320; // drawing area, px
const PAD = 16;
const NODE_R = 7;

export type NodeHandler = (node: string) => void;

function place(position: [number, number]): [number, number] {
  return [PAD + position[0] * (SIZE - 2 * PAD), PAD + position[1] * (SIZE - 2 * PAD)];
}

export class NodeLinkView {
  private payload: CommunityPayload | null = null;
  private showFull = true;

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

  render(payload: CommunityPayload): void {
    this.payload = payload;
    // summarized communities start in the condensed view when available
    this.showFull = !payload.summarized || payload.positions === null;
    this.redraw();
  }

  /** Switch between the supernode summary and the full diagram. */
  toggleFull(): void {
    if (this.payload?.supergraph && this.payload.positions) {
      this.showFull = !this.showFull;
      this.redraw();
    }
  }

  private redraw(): void {
    const payload = this.payload;
    this.root.textContent = "";
    if (!payload) {
      return;
    }
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    svg.setAttribute("class", "nodelink");

    if (!this.showFull && payload.supergraph) {
      this.drawSupergraph(svg, payload);
    } else if (payload.positions) {
      this.drawFull(svg, payload);
    }
    this.root.appendChild(svg);
    this.refreshHighlight();
  }

  private drawFull(svg: SVGSVGElement, payload: CommunityPayload): void {
    const positions = payload.positions as Record<string, [number, number]>;
    for (const [a, b] of payload.edges) {
      const [x1, y1] = place(positions[a]);
      const [x2, y2] = place(positions[b]);
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(x1));
      line.setAttribute("y1", String(y1));
      line.setAttribute("x2", String(x2));
      line.setAttribute("y2", String(y2));
      line.setAttribute("class", "nl-edge");
      svg.appendChild(line);
    }
    const labels = new Map(
      (payload.node_details ?? []).map((d) => [d.node, d.label]),
    );
    for (const node of payload.members) {
      const [cx, cy] = place(positions[node]);
      const el = document.createElementNS(SVG_NS, "circle");
      el.setAttribute("cx", String(cx));
      el.setAttribute("cy", String(cy));
      el.setAttribute("r", String(NODE_R));
      el.setAttribute("class", "nl-node");
      el.dataset.node = node;
      el.dataset.label = labels.get(node) ?? "";
      el.setAttribute("fill", this.state.colors.colorFor(labels.get(node) ?? null));
      const tip = document.createElementNS(SVG_NS, "title");
      tip.textContent = node;
      el.appendChild(tip);
      el.addEventListener("click", () => this.onNodeClick(node));
      svg.appendChild(el);
    }
  }

  private drawSupergraph(svg: SVGSVGElement, payload: CommunityPayload): void {
    const sg = payload.supergraph;
    if (!sg) {
      return;
    }
    const positions = new Map(sg.supernodes.map((sn) => [sn.sub_id, sn.position]));
    const maxSize = Math.max(1, ...sg.supernodes.map((sn) => sn.size));
    for (const edge of sg.superedges) {
      const [x1, y1] = place(positions.get(edge.source) as [number, number]);
      const [x2, y2] = place(positions.get(edge.target) as [number, number]);
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(x1));
      line.setAttribute("y1", String(y1));
      line.setAttribute("x2", String(x2));
      line.setAttribute("y2", String(y2));
      line.setAttribute("class", "nl-superedge");
      line.setAttribute("stroke-width", String(1 + edge.weight));
      svg.appendChild(line);
    }
    for (const sn of sg.supernodes) {
      const [cx, cy] = place(sn.position);
      const el = document.createElementNS(SVG_NS, "circle");
      el.setAttribute("cx", String(cx));
      el.setAttribute("cy", String(cy));
      el.setAttribute("r", String(NODE_R + 10 * (sn.size / maxSize)));
      el.setAttribute("class", "nl-supernode");
      el.dataset.subId = String(sn.sub_id);
      el.setAttribute("fill", this.state.colors.colorFor(sn.label));
      const tip = document.createElementNS(SVG_NS, "title");
      tip.textContent = `sub-community ${sn.sub_id}: ${sn.size} nodes`;
      el.appendChild(tip);
      // highlight every member in both the diagram and the raster
      el.addEventListener("click", () => this.state.setHighlight(sn.members));
      svg.appendChild(el);
    }
  }

  /** Node ids currently shown with the highlight ring. */
  highlightedDomNodes(): Set<string> {
    const out = new Set<string>();
    for (const el of this.root.querySelectorAll<SVGElement>(".nl-node.highlighted")) {
      out.add(el.dataset.node as string);
    }
    return out;
  }

  private refreshHighlight(): void {
    for (const el of this.root.querySelectorAll<SVGElement>(".nl-node")) {
      const on = this.state.highlightedNodes.has(el.dataset.node as string);
      el.classList.toggle("highlighted", on);
    }
    for (const el of this.root.querySelectorAll<SVGElement>(".nl-supernode")) {
      const sg = this.payload?.supergraph;
      const sn = sg?.supernodes.find(
        (s) => String(s.sub_id) === el.dataset.subId,
      );
      const on =
        sn !== undefined &&
        sn.members.every((m) => this.state.highlightedNodes.has(m)) &&
        sn.members.length > 0;
      el.classList.toggle("highlighted", on);
    }
  }

  private refreshColors(): void {
    for (const el of this.root.querySelectorAll<SVGElement>(".nl-node")) {
      const label = el.dataset.label || null;
      el.setAttribute("fill", this.state.colors.colorFor(label));
    }
    for (const el of this.root.querySelectorAll<SVGElement>(".nl-supernode")) {
      const sg = this.payload?.supergraph;
      const sn = sg?.supernodes.find(
        (s) => String(s.sub_id) === el.dataset.subId,
      );
      if (sn) {
        el.setAttribute("fill", this.state.colors.colorFor(sn.label));
      }
    }
  }
}
