import type { StatsPayload } from "./types.js";

export class StatsPanel {
  constructor(private container: HTMLElement) {}

  update(stats: StatsPayload): void {
    this.container.replaceChildren();
    const dl = document.createElement("dl");
    dl.className = "stats-list";
    const entries: Array<[string, number]> = [
      ["check-ins", stats.record_count],
      ["places", stats.distinct_labels],
      ["days with visits", stats.session_count],
    ];
    for (const [label, value] of entries) {
      const dt = document.createElement("dt");
      dt.textContent = label;
      const dd = document.createElement("dd");
      dd.textContent = String(value);
      dl.append(dt, dd);
    }
    this.container.appendChild(dl);

    if (stats.top_patterns.length > 0) {
      const heading = document.createElement("h3");
      heading.textContent = "Most regular routines";
      this.container.appendChild(heading);
      const list = document.createElement("ol");
      list.className = "top-patterns";
      for (const pattern of stats.top_patterns.slice(0, 5)) {
        const li = document.createElement("li");
        li.textContent = `${pattern.items.join(" → ")} (${pattern.support})`;
        list.appendChild(li);
      }
      this.container.appendChild(list);
    }
  }

  clear(): void {
    this.container.replaceChildren();
  }
}
