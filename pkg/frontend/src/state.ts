// Shared view state. Every view reads from here and subscribes to change
// events; the highlighted node set lives in exactly one place, which is
// what keeps the node-link diagram and the activity raster in lockstep.

import { Circle, CommunityRef, sameRef } from "./types.js";
import { ColorMap } from "./colors.js";

export const AXES = ["structural", "temporal", "evolution"] as const;
export type Axis = (typeof AXES)[number];

/** One selected matrix cell, stored as its category labels. No taxonomy
 * label contains "|", so the key is unambiguous. */
export function cellKey(yLabel: string, xLabel: string): string {
  return `${yLabel}|${xLabel}`;
}

export type StateEvent =
  | "matrix-selection"
  | "axes"
  | "community"
  | "highlight"
  | "colors";

type Listener = (event: StateEvent) => void;

export class ViewState {
  axisX: Axis = "structural";
  axisY: Axis = "temporal";

  /** Selected matrix cells as cellKey(y, x) strings; empty = nothing. */
  selectedCells = new Set<string>();

  /** Community whose local views are shown, if any. */
  selectedCommunity: CommunityRef | null = null;

  /** Node ids highlighted in both the node-link diagram and the raster. */
  highlightedNodes = new Set<string>();

  colors: ColorMap = new ColorMap([]);

  private listeners: Listener[] = [];

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(event: StateEvent): void {
    for (const fn of this.listeners) {
      fn(event);
    }
  }

  setAxes(x: Axis, y: Axis): void {
    this.axisX = x;
    this.axisY = y;
    this.selectedCells.clear();
    this.emit("axes");
  }

  /** Replace the selection with the given cells. */
  selectCells(cells: Iterable<string>): void {
    this.selectedCells = new Set(cells);
    this.emit("matrix-selection");
  }

  /** Toggle one cell in or out of the selection (multi-cell selection). */
  toggleCell(cell: string): void {
    if (this.selectedCells.has(cell)) {
      this.selectedCells.delete(cell);
    } else {
      this.selectedCells.add(cell);
    }
    this.emit("matrix-selection");
  }

  selectCommunity(ref: CommunityRef | null): void {
    if (sameRef(this.selectedCommunity, ref)) {
      return;
    }
    this.selectedCommunity = ref;
    this.highlightedNodes.clear();
    this.emit("community");
  }

  setHighlight(nodes: Iterable<string>): void {
    this.highlightedNodes = new Set(nodes);
    this.emit("highlight");
  }

  toggleNode(node: string): void {
    if (this.highlightedNodes.has(node)) {
      this.highlightedNodes.delete(node);
    } else {
      this.highlightedNodes.add(node);
    }
    this.emit("highlight");
  }

  setColors(colors: ColorMap): void {
    this.colors = colors;
    this.emit("colors");
  }

  overrideColor(label: string, color: string): void {
    this.colors.setOverride(label, color);
    this.emit("colors");
  }
}

/** The category labels a circle carries on one taxonomy axis. */
export function circleLabels(circle: Circle, axis: Axis): string[] {
  if (axis === "structural") {
    return circle.structural ? [circle.structural] : [];
  }
  if (axis === "temporal") {
    return circle.temporal ? [circle.temporal] : [];
  }
  return circle.events;
}

/** Every matrix cell this circle falls into under the current axes. */
export function circleCells(circle: Circle, state: ViewState): string[] {
  const cells: string[] = [];
  for (const y of circleLabels(circle, state.axisY)) {
    for (const x of circleLabels(circle, state.axisX)) {
      cells.push(cellKey(y, x));
    }
  }
  return cells;
}

/** A circle is highlighted iff it falls into at least one selected cell. */
export function circleMatchesSelection(circle: Circle, state: ViewState): boolean {
  return circleCells(circle, state).some((cell) => state.selectedCells.has(cell));
}
