// Offline replay: the app renders all four views from a CLI-exported
// document with no server reachable at all.

import { beforeEach, describe, expect, it, vi } from "vitest";
import { App } from "../src/app.js";
import { click, loadFixture } from "./helpers.js";

const doc = loadFixture();

let app: App;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  vi.stubGlobal("fetch", () => {
    throw new Error("offline replay must not touch the network");
  });
  app = new App(document.getElementById("app") as HTMLElement);
});

describe("offline replay", () => {
  it("renders all four views from the document alone", async () => {
    await app.loadDocument(doc);

    // matrix: full grid of counts
    const matrix = doc.matrices.find(
      (m) => m.axis_x === "structural" && m.axis_y === "temporal",
    )!;
    expect(document.querySelectorAll("#matrix .matrix-cell").length).toBe(
      matrix.x_labels.length * matrix.y_labels.length,
    );

    // global view: every community circle and every link drawn
    expect(document.querySelectorAll("#globalview .gv-circle").length).toBe(
      doc.globalview.circles.length,
    );
    expect(document.querySelectorAll("#globalview .gv-link").length).toBe(
      doc.globalview.links.length,
    );

    // local views are pre-populated with the first community
    const first = doc.communities.find(
      (c) =>
        c.slice === doc.globalview.circles[0].slice &&
        c.local_id === doc.globalview.circles[0].local_id,
    )!;
    expect(document.querySelectorAll("#nodelink .nl-node").length).toBe(
      first.size,
    );
    expect(document.querySelectorAll("#tam .tam-row").length).toBe(first.size);
    expect(document.querySelectorAll("#nodelink .nl-edge").length).toBe(
      first.edges.length,
    );
  });

  it("keeps the interaction contract without a server", async () => {
    await app.loadDocument(doc);

    // click a different community: local views switch to it
    const target = doc.communities.find(
      (c) => c.slice === 2 && c.local_id === 3,
    )!;
    click(
      document.querySelector(
        `.gv-circle[data-slice="2"][data-local-id="3"]`,
      )!,
    );
    await app.lastLoad;
    expect(document.querySelectorAll("#nodelink .nl-node").length).toBe(
      target.size,
    );

    // node highlight equality holds offline too
    click(document.querySelector(".nl-node")!);
    expect(app.nodelink.highlightedDomNodes()).toEqual(
      app.tam.highlightedDomNodes(),
    );
    expect(app.nodelink.highlightedDomNodes().size).toBe(1);
  });

  it("shows network facts, then community facts after the auto-select", async () => {
    await app.loadDocument(doc);
    expect(app.panel.mode()).toBe("community");
    const heading = document.querySelector("#panel h3")?.textContent;
    expect(heading).toContain("community");

    // tooltips for circles are generated client-side from the payload
    const title = document.querySelector(".gv-circle title")?.textContent;
    expect(title).toContain("structural:");
    expect(title).toContain("events:");
  });

  it("switching axes pulls the matching matrix from the document", async () => {
    await app.loadDocument(doc);
    const select = document.getElementById("axis-x") as HTMLSelectElement;
    select.value = "evolution";
    select.dispatchEvent(new Event("change"));
    await app.lastLoad;

    const matrix = doc.matrices.find(
      (m) => m.axis_x === "evolution" && m.axis_y === "temporal",
    )!;
    expect(document.querySelectorAll("#matrix .matrix-cell").length).toBe(
      matrix.x_labels.length * matrix.y_labels.length,
    );
  });
});
