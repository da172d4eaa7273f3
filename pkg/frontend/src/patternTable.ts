import type { PatternRow } from "./types.js";

export type SortKey = "rank" | "support" | "length";

/** Row order for a sort key. "rank" keeps the server's canonical order. */
export function sortPatterns(rows: PatternRow[], key: SortKey): PatternRow[] {
  const indexed = rows.map((row, i) => ({ row, i }));
  if (key === "support") {
    indexed.sort((a, b) => b.row.support - a.row.support || a.i - b.i);
  } else if (key === "length") {
    indexed.sort((a, b) => b.row.items.length - a.row.items.length || a.i - b.i);
  }
  return indexed.map((entry) => entry.row);
}

export class PatternTable {
  private rows: PatternRow[] = [];
  private sortKey: SortKey = "rank";

  constructor(
    private container: HTMLElement,
    private onHighlight: (items: string[]) => void,
  ) {}

  update(rows: PatternRow[]): void {
    this.rows = rows;
    this.renderRows();
  }

  setSort(key: SortKey): void {
    this.sortKey = key;
    this.renderRows();
  }

  private renderRows(): void {
    this.container.replaceChildren();
    if (this.rows.length === 0) {
      const empty = document.createElement("div");
      empty.className = "empty-state";
      empty.textContent = "No patterns at this support level.";
      this.container.appendChild(empty);
      return;
    }
    const maxSupport = this.rows[0]?.support ?? 1;
    const table = document.createElement("table");
    table.className = "pattern-table";
    const head = table.createTHead().insertRow();
    for (const { label, key } of [
      { label: "#", key: "rank" as SortKey },
      { label: "pattern", key: "length" as SortKey },
      { label: "support", key: "support" as SortKey },
    ]) {
      const th = document.createElement("th");
      th.textContent = label;
      th.addEventListener("click", () => this.setSort(key));
      head.appendChild(th);
    }
    const body = table.createTBody();
    sortPatterns(this.rows, this.sortKey).forEach((row, position) => {
      const tr = body.insertRow();
      tr.insertCell().textContent = String(position + 1);
      const items = tr.insertCell();
      items.className = "pattern-items";
      items.textContent = row.items.join(" → ");
      const cell = tr.insertCell();
      cell.className = "support-cell";
      const bar = document.createElement("span");
      bar.className = "support-bar";
      bar.style.width = `${Math.max(4, (100 * row.support) / maxSupport)}%`;
      cell.appendChild(bar);
      const value = document.createElement("span");
      value.textContent = String(row.support);
      cell.appendChild(value);
      tr.addEventListener("click", () => this.onHighlight(row.items));
    });
    this.container.appendChild(table);
  }
}
