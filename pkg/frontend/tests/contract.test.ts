// The linked-view interaction contract, driven through real DOM events
// against the app wired to a stubbed server.

import { beforeEach, describe, expect, it, vi } from "vitest";
import { App } from "../src/app.js";
import { cellKey } from "../src/state.js";
import { click, loadFixture, serveDocument, type FetchStub } from "./helpers.js";

const doc = loadFixture();

let app: App;
let stub: FetchStub;

function circleEl(slice: number, localId: number): SVGElement {
  const el = document.querySelector<SVGElement>(
    `.gv-circle[data-slice="${slice}"][data-local-id="${localId}"]`,
  );
  if (!el) {
    throw new Error(`no circle (${slice},${localId}) rendered`);
  }
  return el;
}

function selectedMatrixCells(): Set<string> {
  const out = new Set<string>();
  for (const td of document.querySelectorAll<HTMLElement>(".matrix-cell.selected")) {
    out.add(td.dataset.cell as string);
  }
  return out;
}

function highlightSetsEverywhere(): [Set<string>, Set<string>] {
  return [app.nodelink.highlightedDomNodes(), app.tam.highlightedDomNodes()];
}

beforeEach(async () => {
  document.body.innerHTML = '<div id="app"></div>';
  stub = serveDocument(doc);
  vi.stubGlobal("fetch", stub.fetch);
  app = new App(document.getElementById("app") as HTMLElement);
  await app.loadAnalysis("", "a1");
  stub.reset();
});

describe("global view circle clicks", () => {
  it("loads a community with exactly one fetch and fills both local views", async () => {
    // make (1,1) highlighted first: select its matrix cell (default axes
    // are structural on x, temporal on y)
    const cell = cellKey("Continuous/Dispersed", "Clique");
    click(
      document.querySelector(`.matrix-cell[data-cell="${cell}"]`)!,
    );
    expect(app.globalview.isHighlighted(doc.globalview.circles[1])).toBe(true);

    const before = selectedMatrixCells();
    click(circleEl(1, 1));
    await app.lastLoad;

    expect(stub.hits("/community/")).toBe(1);
    expect(stub.hits("/community/1/1")).toBe(1);
    const size = doc.communities.find((c) => c.slice === 1 && c.local_id === 1)!
      .size;
    expect(document.querySelectorAll("#nodelink .nl-node").length).toBe(size);
    expect(document.querySelectorAll("#tam .tam-row").length).toBe(size);
    // clicking a highlighted circle never changes the matrix selection
    expect(selectedMatrixCells()).toEqual(before);
    expect(app.state.selectedCells).toEqual(before);
  });

  it("re-selects the matrix to the community's category pair on an off-selection click", async () => {
    // select a pair that does NOT cover the star community (2,3)
    click(
      document.querySelector(
        `.matrix-cell[data-cell="${cellKey("Continuous/Dispersed", "Clique")}"]`,
      )!,
    );
    const star = doc.globalview.circles.find(
      (c) => c.slice === 2 && c.local_id === 3,
    )!;
    expect(app.globalview.isHighlighted(star)).toBe(false);

    click(circleEl(2, 3));
    await app.lastLoad;

    // previous cells are deselected; only the star's pair remains
    const expected = new Set([cellKey("Sporadic/Grouped", "Star")]);
    expect(app.state.selectedCells).toEqual(expected);
    expect(selectedMatrixCells()).toEqual(expected);
    expect(app.globalview.isHighlighted(star)).toBe(true);
    expect(stub.hits("/community/2/3")).toBe(1);
  });

  it("keeps one community fetch per click across repeated clicks", async () => {
    click(circleEl(1, 0));
    await app.lastLoad;
    click(circleEl(3, 1));
    await app.lastLoad;
    expect(stub.hits("/community/")).toBe(2);
  });
});

describe("node-link and raster stay in lockstep", () => {
  beforeEach(async () => {
    click(circleEl(1, 0)); // 6-member community with blue/teal labels
    await app.lastLoad;
  });

  it("highlights the same node from either side", () => {
    const row = document.querySelector<HTMLElement>('.tam-row[data-node="b2"]')!;
    click(row.querySelector(".tam-square")!);
    let [inDiagram, inRaster] = highlightSetsEverywhere();
    expect(inDiagram).toEqual(new Set(["b2"]));
    expect(inRaster).toEqual(new Set(["b2"]));

    click(document.querySelector('.nl-node[data-node="b4"]')!);
    [inDiagram, inRaster] = highlightSetsEverywhere();
    expect(inDiagram).toEqual(new Set(["b2", "b4"]));
    expect(inRaster).toEqual(inDiagram);

    // toggling off keeps the two views equal as well
    click(document.querySelector('.nl-node[data-node="b2"]')!);
    [inDiagram, inRaster] = highlightSetsEverywhere();
    expect(inDiagram).toEqual(new Set(["b4"]));
    expect(inRaster).toEqual(inDiagram);
  });

  it("shows node metrics when exactly one node is highlighted", () => {
    click(document.querySelector('.nl-node[data-node="b0"]')!);
    expect(app.panel.mode()).toBe("node");
    expect(document.querySelector("#panel h3")?.textContent).toBe("node b0");

    click(document.querySelector('.nl-node[data-node="b1"]')!);
    expect(app.panel.mode()).toBe("community");
  });

  it("recolors both views when a label color is overridden", () => {
    const nodeEl = document.querySelector<SVGElement>('.nl-node[data-node="b0"]')!;
    const labelEl = document.querySelector<HTMLElement>(
      '.tam-row[data-node="b0"] .tam-label',
    )!;
    const before = nodeEl.getAttribute("fill");
    app.state.overrideColor("blue", "#112233");
    expect(nodeEl.getAttribute("fill")).toBe("#112233");
    expect(nodeEl.getAttribute("fill")).not.toBe(before);
    expect(labelEl.style.color).not.toBe("");
  });
});

describe("matrix selection modes", () => {
  it("row, column, and select-all cover the right cells", () => {
    const matrix = doc.matrices.find(
      (m) => m.axis_x === "structural" && m.axis_y === "temporal",
    )!;
    const rows = document.querySelectorAll("#matrix table tr");

    click(document.querySelectorAll(".matrix-row-header")[0]);
    expect(app.state.selectedCells.size).toBe(matrix.x_labels.length);

    click(document.querySelectorAll(".matrix-col-header")[0]);
    expect(app.state.selectedCells.size).toBe(matrix.y_labels.length);

    click(document.querySelector(".matrix-corner")!);
    expect(app.state.selectedCells.size).toBe(
      matrix.x_labels.length * matrix.y_labels.length,
    );
    expect(rows.length).toBe(matrix.y_labels.length + 1);
  });

  it("clicking the only selected cell clears the selection", () => {
    const cell = document.querySelector<HTMLElement>(".matrix-cell")!;
    click(cell);
    expect(app.state.selectedCells.size).toBe(1);
    click(cell);
    expect(app.state.selectedCells.size).toBe(0);
    // empty selection: nothing highlighted
    expect(document.querySelectorAll(".gv-circle.highlighted").length).toBe(0);
  });
});
