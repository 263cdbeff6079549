// Global evolution view: one column per timeslice, one circle per
// community, straight links between related communities. Community size is
// redundantly coded on radius and fill; link thickness scales with member
// overlap. The view starts zoomed to fit and supports wheel zoom and drag
// pan on top of that.

import { sizeColor, sizeRadius } from "./colors.js";
import { circleMatchesSelection, ViewState } from "./state.js";
import { Circle, GlobalViewPayload } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const CELL = 40; // pixels per grid cell at zoom 1

export type CircleHandler = (circle: Circle) => void;

export class GlobalView {
  private payload: GlobalViewPayload | null = null;
  private svg: SVGSVGElement | null = null;
  private world: SVGGElement | null = null;
  private zoom = 1;
  private panX = 0;
  private panY = 0;

  constructor(
    private root: HTMLElement,
    private state: ViewState,
    private onCircleClick: CircleHandler,
  ) {
    state.subscribe((event) => {
      if (event === "matrix-selection" || event === "axes") {
        this.refreshHighlight();
      }
      if (event === "community") {
        this.refreshSelected();
      }
    });
  }

  render(payload: GlobalViewPayload): void {
    this.payload = payload;
    this.root.textContent = "";
    const svg = document.createElementNS(SVG_NS, "svg");
    const width = Math.max(payload.columns.length, 1) * CELL;
    const height = Math.max(payload.capacity, 1) * CELL;
    // zoom-to-fit default: the viewBox covers the whole grid
    svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    svg.setAttribute("class", "globalview");
    const world = document.createElementNS(SVG_NS, "g");
    svg.appendChild(world);
    this.svg = svg;
    this.world = world;
    this.zoom = 1;
    this.panX = 0;
    this.panY = 0;

    const maxSize = Math.max(1, ...payload.circles.map((c) => c.size));
    const maxOverlap = Math.max(1, ...payload.links.map((l) => l.overlap));

    for (const link of payload.links) {
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String((link.source.column + 0.5) * CELL));
      line.setAttribute("y1", String((link.source.row + 0.5) * CELL));
      line.setAttribute("x2", String((link.target.column + 0.5) * CELL));
      line.setAttribute("y2", String((link.target.row + 0.5) * CELL));
      line.setAttribute("class", "gv-link");
      line.setAttribute(
        "stroke-width",
        String(1 + 3 * (link.overlap / maxOverlap)),
      );
      const tip = document.createElementNS(SVG_NS, "title");
      tip.textContent =
        `${link.event}: (${link.source.slice},${link.source.local_id}) to ` +
        `(${link.target.slice},${link.target.local_id}), overlap ${link.overlap}`;
      line.appendChild(tip);
      world.appendChild(line);
    }

    for (const circle of payload.circles) {
      const el = document.createElementNS(SVG_NS, "circle");
      el.setAttribute("cx", String((circle.column + 0.5) * CELL));
      el.setAttribute("cy", String((circle.row + 0.5) * CELL));
      el.setAttribute("r", String(sizeRadius(circle.size, maxSize) * CELL));
      el.setAttribute("fill", sizeColor(circle.size, maxSize));
      el.setAttribute("class", "gv-circle");
      el.dataset.slice = String(circle.slice);
      el.dataset.localId = String(circle.local_id);
      const tip = document.createElementNS(SVG_NS, "title");
      tip.textContent = this.tooltip(circle);
      el.appendChild(tip);
      el.addEventListener("click", () => this.onCircleClick(circle));
      world.appendChild(el);
    }

    svg.addEventListener("wheel", (ev) => {
      ev.preventDefault();
      const factor = ev.deltaY < 0 ? 1.2 : 1 / 1.2;
      this.zoom = Math.min(20, Math.max(0.2, this.zoom * factor));
      this.applyTransform();
    });
    let dragging: [number, number] | null = null;
    svg.addEventListener("mousedown", (ev) => {
      dragging = [ev.clientX - this.panX, ev.clientY - this.panY];
    });
    svg.addEventListener("mousemove", (ev) => {
      if (dragging) {
        this.panX = ev.clientX - dragging[0];
        this.panY = ev.clientY - dragging[1];
        this.applyTransform();
      }
    });
    svg.addEventListener("mouseup", () => {
      dragging = null;
    });

    this.root.appendChild(svg);
    this.refreshHighlight();
    this.refreshSelected();
  }

  /** Tooltip text assembled client-side from the payload alone. */
  private tooltip(circle: Circle): string {
    const events = circle.events.length ? circle.events.join(", ") : "none";
    return (
      `community (${circle.slice},${circle.local_id})\n` +
      `size ${circle.size}, column ${circle.column}, row ${circle.row}\n` +
      `structural: ${circle.structural ?? "?"}\n` +
      `temporal: ${circle.temporal ?? "?"}\n` +
      `events: ${events}`
    );
  }

  private applyTransform(): void {
    this.world?.setAttribute(
      "transform",
      `translate(${this.panX} ${this.panY}) scale(${this.zoom})`,
    );
  }

  /** Whether this circle is currently highlighted by the matrix selection. */
  isHighlighted(circle: Circle): boolean {
    return circleMatchesSelection(circle, this.state);
  }

  private refreshHighlight(): void {
    if (!this.payload || !this.svg) {
      return;
    }
    const byKey = new Map(
      this.payload.circles.map((c) => [`${c.slice}/${c.local_id}`, c]),
    );
    for (const el of this.svg.querySelectorAll<SVGElement>(".gv-circle")) {
      const circle = byKey.get(`${el.dataset.slice}/${el.dataset.localId}`);
      const on = circle !== undefined && this.isHighlighted(circle);
      el.classList.toggle("highlighted", on);
    }
  }

  private refreshSelected(): void {
    if (!this.svg) {
      return;
    }
    const ref = this.state.selectedCommunity;
    for (const el of this.svg.querySelectorAll<SVGElement>(".gv-circle")) {
      const on =
        ref !== null &&
        el.dataset.slice === String(ref.slice) &&
        el.dataset.localId === String(ref.local_id);
      el.classList.toggle("selected", on);
    }
  }
}
