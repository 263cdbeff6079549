// Application wiring: one shared ViewState, four views, one detail panel,
// and the interaction contract between them. Works identically against a
// live server (HttpSource) and a loaded export file (OfflineSource).

import { DataSource, HttpSource, OfflineSource, uploadNetwork } from "./api.js";
import { ColorMap } from "./colors.js";
import { GlobalView } from "./globalview.js";
import { MatrixView } from "./matrix.js";
import { NodeLinkView } from "./nodelink.js";
import { DetailPanel } from "./panel.js";
import { Axis, AXES, ViewState, circleCells } from "./state.js";
import { TamView } from "./tam.js";
import { Circle, CommunityPayload, ExportDocument } from "./types.js";

function section(parent: HTMLElement, id: string, title: string): HTMLElement {
  const wrap = document.createElement("section");
  wrap.id = `${id}-section`;
  const h = document.createElement("h2");
  h.textContent = title;
  wrap.appendChild(h);
  const body = document.createElement("div");
  body.id = id;
  wrap.appendChild(body);
  parent.appendChild(wrap);
  return body;
}

export class App {
  readonly state = new ViewState();
  readonly matrix: MatrixView;
  readonly globalview: GlobalView;
  readonly nodelink: NodeLinkView;
  readonly tam: TamView;
  readonly panel: DetailPanel;

  private source: DataSource | null = null;
  private communityPayload: CommunityPayload | null = null;
  private loadToken = 0;

  /** Promise of the most recent async action, for tests to await. */
  lastLoad: Promise<void> = Promise.resolve();

  constructor(private root: HTMLElement) {
    const axisBar = document.createElement("div");
    axisBar.id = "axis-bar";
    this.root.appendChild(axisBar);
    this.buildAxisSelectors(axisBar);

    this.matrix = new MatrixView(section(root, "matrix", "Taxonomy matrix"), this.state);
    this.globalview = new GlobalView(
      section(root, "globalview", "Global view"),
      this.state,
      (circle) => this.clickCircle(circle),
    );
    this.nodelink = new NodeLinkView(
      section(root, "nodelink", "Node-link"),
      this.state,
      (node) => this.clickNode(node),
    );
    this.tam = new TamView(
      section(root, "tam", "Activity raster"),
      this.state,
      (node) => this.clickNode(node),
    );
    this.panel = new DetailPanel(section(root, "panel", "Details"), this.state);
  }

  private buildAxisSelectors(bar: HTMLElement): void {
    for (const which of ["x", "y"] as const) {
      const label = document.createElement("label");
      label.textContent = `${which} axis `;
      const select = document.createElement("select");
      select.id = `axis-${which}`;
      for (const axis of AXES) {
        const option = document.createElement("option");
        option.value = axis;
        option.textContent = axis;
        select.appendChild(option);
      }
      select.value = which === "x" ? this.state.axisX : this.state.axisY;
      select.addEventListener("change", () => {
        const x = (bar.querySelector("#axis-x") as HTMLSelectElement).value as Axis;
        const y = (bar.querySelector("#axis-y") as HTMLSelectElement).value as Axis;
        this.state.setAxes(x, y);
        this.lastLoad = this.reloadMatrix();
      });
      label.appendChild(select);
      bar.appendChild(label);
    }
  }

  /** Connect to a running server's analysis and render the global level. */
  loadAnalysis(baseUrl: string, analysisId: string): Promise<void> {
    this.lastLoad = this.loadFrom(new HttpSource(baseUrl, analysisId));
    return this.lastLoad;
  }

  /** Offline replay: render everything out of a CLI export document. */
  loadDocument(doc: ExportDocument): Promise<void> {
    const source = new OfflineSource(doc);
    this.lastLoad = this.loadFrom(source).then(() => {
      // no interaction is needed to see all four views: preselect the
      // first community so the local views render from the document too
      const first = doc.globalview.circles[0];
      if (first) {
        return this.clickCircle(first);
      }
    });
    return this.lastLoad;
  }

  private async loadFrom(source: DataSource): Promise<void> {
    this.source = source;
    this.loadToken += 1;
    const token = this.loadToken;
    const [summary, globalview, matrix] = await Promise.all([
      source.getSummary(),
      source.getGlobalview(),
      source.getMatrix(this.state.axisX, this.state.axisY),
    ]);
    if (token !== this.loadToken) {
      return; // a newer analysis superseded this load
    }
    this.state.selectedCommunity = null;
    this.state.highlightedNodes.clear();
    this.state.selectedCells.clear();
    this.communityPayload = null;
    this.state.setColors(new ColorMap(summary.summary.metadata_categories));
    this.panel.setSummary(summary);
    this.matrix.render(matrix);
    this.globalview.render(globalview);
  }

  private async reloadMatrix(): Promise<void> {
    if (!this.source) {
      return;
    }
    const token = this.loadToken;
    const matrix = await this.source.getMatrix(this.state.axisX, this.state.axisY);
    if (token === this.loadToken) {
      this.matrix.render(matrix);
    }
  }

  /**
   * The Global View click contract: a click on a circle outside the
   * current matrix selection re-selects exactly that community's category
   * cells (deselecting everything else); a click on a highlighted circle
   * leaves the selection untouched. Either way the community is loaded
   * with a single fetch and both local views are populated from it.
   */
  clickCircle(circle: Circle): Promise<void> {
    if (!this.globalview.isHighlighted(circle)) {
      this.state.selectCells(circleCells(circle, this.state));
    }
    this.state.selectCommunity({ slice: circle.slice, local_id: circle.local_id });
    this.lastLoad = this.loadCommunity(circle.slice, circle.local_id);
    return this.lastLoad;
  }

  private async loadCommunity(slice: number, localId: number): Promise<void> {
    if (!this.source) {
      return;
    }
    this.loadToken += 1;
    const token = this.loadToken;
    const payload = await this.source.getCommunity(slice, localId);
    if (token !== this.loadToken) {
      return; // stale: the user clicked something newer meanwhile
    }
    this.communityPayload = payload;
    this.nodelink.render(payload);
    this.tam.render(payload.tam);
    this.panel.setCommunity(payload);
  }

  /** Toggle a node's shared highlight; show its metrics when it is alone. */
  clickNode(node: string): void {
    this.state.toggleNode(node);
    const highlighted = this.state.highlightedNodes;
    if (highlighted.size === 1 && this.communityPayload) {
      const only = highlighted.values().next().value as string;
      const details = this.communityPayload.node_details?.find(
        (d) => d.node === only,
      );
      if (details) {
        this.panel.setNode(details);
        return;
      }
      const { slice, local_id } = this.communityPayload;
      this.lastLoad = (async () => {
        const fetched = await this.source?.getNode(slice, local_id, only);
        if (fetched && this.state.highlightedNodes.has(only)) {
          this.panel.setNode(fetched);
        }
      })();
      return;
    }
    this.panel.setNode(null);
  }
}

/** Build the full page: data controls on top, the app below. */
export function bootstrap(root: HTMLElement): App {
  const controls = document.createElement("div");
  controls.id = "data-controls";

  const offline = document.createElement("input");
  offline.type = "file";
  offline.id = "offline-file";
  offline.accept = ".json";
  const offlineLabel = document.createElement("label");
  offlineLabel.textContent = "open exported analysis: ";
  offlineLabel.appendChild(offline);
  controls.appendChild(offlineLabel);

  const form = document.createElement("form");
  form.id = "upload-form";
  const edges = document.createElement("input");
  edges.type = "file";
  edges.id = "edges-file";
  const slices = document.createElement("input");
  slices.type = "number";
  slices.id = "slice-count";
  slices.placeholder = "timeslices (auto)";
  const submit = document.createElement("button");
  submit.type = "submit";
  submit.textContent = "analyze on server";
  form.appendChild(edges);
  form.appendChild(slices);
  form.appendChild(submit);
  controls.appendChild(form);

  const status = document.createElement("span");
  status.id = "load-status";
  controls.appendChild(status);

  root.appendChild(controls);
  const app = new App(root);

  offline.addEventListener("change", async () => {
    const file = offline.files?.[0];
    if (!file) {
      return;
    }
    try {
      const doc = JSON.parse(await file.text()) as ExportDocument;
      await app.loadDocument(doc);
      status.textContent = `offline: ${file.name}`;
    } catch (err) {
      status.textContent = `load failed: ${err}`;
    }
  });

  form.addEventListener("submit", async (ev) => {
    ev.preventDefault();
    const file = edges.files?.[0];
    if (!file) {
      status.textContent = "choose an edge list first";
      return;
    }
    try {
      status.textContent = "analyzing...";
      const config = slices.value ? { slice_count: Number(slices.value) } : {};
      const result = await uploadNetwork("", file, null, config);
      await app.loadAnalysis("", result.analysis_id);
      status.textContent = `analysis ${result.analysis_id}`;
    } catch (err) {
      status.textContent = `analysis failed: ${err}`;
    }
  });

  return app;
}
