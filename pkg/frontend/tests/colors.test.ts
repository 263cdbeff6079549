// Color encodings: coverage, stability, overrides, and the size ramp.

import { describe, expect, it } from "vitest";
import { ColorMap, sizeColor, sizeRadius, UNLABELED_COLOR } from "../src/colors.js";

function luminance(color: string): number {
  const r = parseInt(color.slice(1, 3), 16);
  const g = parseInt(color.slice(3, 5), 16);
  const b = parseInt(color.slice(5, 7), 16);
  return 0.2126 * r + 0.7152 * g + 0.0722 * b;
}

describe("categorical colors", () => {
  it("covers every label and ignores input order", () => {
    const a = new ColorMap(["zeta", "alpha", "mid"]);
    const b = new ColorMap(["mid", "zeta", "alpha"]);
    for (const label of ["alpha", "mid", "zeta"]) {
      expect(a.colorFor(label)).toBe(b.colorFor(label));
      expect(a.colorFor(label)).toMatch(/^#[0-9a-f]{6}$/i);
    }
    expect(new Set(a.labels())).toEqual(new Set(["alpha", "mid", "zeta"]));
  });

  it("distinct labels get distinct colors while the palette lasts", () => {
    const labels = ["a", "b", "c", "d", "e", "f"];
    const map = new ColorMap(labels);
    const used = new Set(labels.map((l) => map.colorFor(l)));
    expect(used.size).toBe(labels.length);
  });

  it("applies and clears overrides", () => {
    const map = new ColorMap(["a"]);
    const original = map.colorFor("a");
    map.setOverride("a", "#123456");
    expect(map.colorFor("a")).toBe("#123456");
    map.clearOverride("a");
    expect(map.colorFor("a")).toBe(original);
  });

  it("unlabeled nodes get the fallback color", () => {
    const map = new ColorMap(["a"]);
    expect(map.colorFor(null)).toBe(UNLABELED_COLOR);
    expect(map.colorFor("unknown")).toBe(UNLABELED_COLOR);
  });
});

describe("size encoding", () => {
  it("bigger communities get darker fills and larger radii", () => {
    const sizes = [1, 5, 20, 80, 200];
    for (let i = 1; i < sizes.length; i++) {
      expect(luminance(sizeColor(sizes[i], 200))).toBeLessThan(
        luminance(sizeColor(sizes[i - 1], 200)),
      );
      expect(sizeRadius(sizes[i], 200)).toBeGreaterThan(
        sizeRadius(sizes[i - 1], 200),
      );
    }
  });

  it("stays within the grid cell", () => {
    expect(sizeRadius(10_000, 10_000)).toBeLessThanOrEqual(0.5);
    expect(sizeRadius(1, 10_000)).toBeGreaterThan(0);
  });
});
