// Taxonomy matrix: a clickable grid of category-pair counts. Clicking a
// cell selects that pair, a row or column header selects the whole line,
// and the top-left corner selects everything. Ctrl/Cmd-click toggles a
// cell in and out of a multi-cell selection; clicking the only selected
// cell clears the selection.

import { MatrixPayload } from "./types.js";
import { ViewState, cellKey } from "./state.js";

export class MatrixView {
  private payload: MatrixPayload | null = null;

  constructor(
    private root: HTMLElement,
    private state: ViewState,
  ) {
    state.subscribe((event) => {
      if (event === "matrix-selection") {
        this.refreshSelection();
      }
    });
  }

  render(payload: MatrixPayload): void {
    this.payload = payload;
    this.root.textContent = "";
    const table = document.createElement("table");
    table.className = "matrix";

    const head = table.insertRow();
    const corner = head.insertCell();
    corner.textContent = "✱"; // select-all corner
    corner.className = "matrix-corner";
    corner.title = "select the whole matrix";
    corner.addEventListener("click", () => this.selectAll());
    for (const [xi, xLabel] of payload.x_labels.entries()) {
      const th = head.insertCell();
      th.textContent = xLabel;
      th.className = "matrix-col-header";
      th.title = `select column ${xLabel}`;
      th.addEventListener("click", () => this.selectColumn(xi));
    }

    for (const [yi, yLabel] of payload.y_labels.entries()) {
      const tr = table.insertRow();
      const th = tr.insertCell();
      th.textContent = yLabel;
      th.className = "matrix-row-header";
      th.title = `select row ${yLabel}`;
      th.addEventListener("click", () => this.selectRow(yi));
      for (const [xi, count] of payload.counts[yi].entries()) {
        const td = tr.insertCell();
        td.textContent = String(count);
        td.className = "matrix-cell";
        td.dataset.cell = cellKey(yLabel, payload.x_labels[xi]);
        td.addEventListener("click", (ev) => {
          this.clickCell(td.dataset.cell as string, ev.ctrlKey || ev.metaKey);
        });
      }
    }
    this.root.appendChild(table);
    this.refreshSelection();
  }

  private clickCell(cell: string, additive: boolean): void {
    if (additive) {
      this.state.toggleCell(cell);
      return;
    }
    const current = this.state.selectedCells;
    if (current.size === 1 && current.has(cell)) {
      this.state.selectCells([]);
    } else {
      this.state.selectCells([cell]);
    }
  }

  private selectRow(yi: number): void {
    const p = this.payload;
    if (!p) {
      return;
    }
    this.state.selectCells(p.x_labels.map((x) => cellKey(p.y_labels[yi], x)));
  }

  private selectColumn(xi: number): void {
    const p = this.payload;
    if (!p) {
      return;
    }
    this.state.selectCells(p.y_labels.map((y) => cellKey(y, p.x_labels[xi])));
  }

  private selectAll(): void {
    const p = this.payload;
    if (!p) {
      return;
    }
    const cells: string[] = [];
    for (const y of p.y_labels) {
      for (const x of p.x_labels) {
        cells.push(cellKey(y, x));
      }
    }
    this.state.selectCells(cells);
  }

  private refreshSelection(): void {
    for (const td of this.root.querySelectorAll<HTMLElement>(".matrix-cell")) {
      const selected = this.state.selectedCells.has(td.dataset.cell as string);
      td.classList.toggle("selected", selected);
    }
  }
}
