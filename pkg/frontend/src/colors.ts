// Documented default encodings: a sequential blue ramp for community size
// (size is redundantly coded on radius and fill) and a categorical palette
// for metadata labels, with user overrides applied on top.

const RAMP_LIGHT: [number, number, number] = [222, 235, 247];
const RAMP_DARK: [number, number, number] = [8, 69, 148];

/** Categorical palette for metadata labels (cycled when exhausted). */
export const CATEGORY_PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#59a14f",
  "#e15759",
  "#b07aa1",
  "#edc948",
  "#76b7b2",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
];

/** Fallback for nodes without a metadata label. */
export const UNLABELED_COLOR = "#888888";

function hex(channel: number): string {
  return Math.round(channel).toString(16).padStart(2, "0");
}

function mix(a: number, b: number, t: number): number {
  return a + (b - a) * t;
}

/**
 * Sequential fill for a community of `size` among communities up to
 * `maxSize`. Square-root scaling keeps small communities distinguishable
 * when one giant community would otherwise flatten the ramp.
 */
export function sizeColor(size: number, maxSize: number): string {
  const span = Math.max(maxSize, 1);
  const t = Math.sqrt(Math.min(size, span) / span);
  const rgb = RAMP_LIGHT.map((c, i) => mix(c, RAMP_DARK[i], t));
  return `#${hex(rgb[0])}${hex(rgb[1])}${hex(rgb[2])}`;
}

/** Circle radius for a community of `size`, in grid-cell units. */
export function sizeRadius(size: number, maxSize: number): number {
  const span = Math.max(maxSize, 1);
  return 0.12 + 0.3 * Math.sqrt(Math.min(size, span) / span);
}

/**
 * Label-to-color assignment covering every known label, with per-session
 * user overrides. Labels get palette colors in sorted order so the
 * assignment does not depend on payload ordering.
 */
export class ColorMap {
  private base = new Map<string, string>();
  private overrides = new Map<string, string>();

  constructor(labels: Iterable<string>) {
    const sorted = Array.from(new Set(labels)).sort();
    sorted.forEach((label, i) => {
      this.base.set(label, CATEGORY_PALETTE[i % CATEGORY_PALETTE.length]);
    });
  }

  labels(): string[] {
    return Array.from(this.base.keys());
  }

  colorFor(label: string | null): string {
    if (label === null) {
      return UNLABELED_COLOR;
    }
    return this.overrides.get(label) ?? this.base.get(label) ?? UNLABELED_COLOR;
  }

  setOverride(label: string, color: string): void {
    this.overrides.set(label, color);
  }

  clearOverride(label: string): void {
    this.overrides.delete(label);
  }
}
