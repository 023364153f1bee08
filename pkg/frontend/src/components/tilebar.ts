// TileBar: one row per chapter, one cell per token chunk, cell darkness
// proportional to the term count inside that chunk.

import { clear, h } from "../dom.js";
import type { TileBarPayload } from "../types.js";

export function renderTileBar(host: HTMLElement, grid: TileBarPayload): void {
  clear(host);
  const root = h("div", { class: "tilebar", "data-term": grid.term });
  root.append(h("div", { class: "tilebar-label" }, [`"${grid.term}" (${grid.lemma})`]));
  for (const row of grid.rows) {
    const rowEl = h("div", { class: "tilebar-row", "data-chapter": String(row.chapter) });
    rowEl.append(h("span", { class: "tilebar-title" }, [`${row.chapter}. ${row.title}`]));
    const cells = h("span", { class: "tilebar-cells" });
    for (const count of row.counts) {
      const cell = h("span", {
        class: "tilebar-cell",
        "data-count": String(count),
        title: String(count),
      });
      const strength = grid.maxCount > 0 ? count / grid.maxCount : 0;
      cell.style.backgroundColor = `rgba(40, 80, 140, ${strength.toFixed(3)})`;
      cells.append(cell);
    }
    rowEl.append(cells);
    root.append(rowEl);
  }
  host.append(root);
}
